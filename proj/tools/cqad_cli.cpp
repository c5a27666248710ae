// Command-line front end: cqad <subcommand> --config <path> [--out <path>] [--threads N]

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cqad/config.hpp"
#include "cqad/csv.hpp"
#include "cqad/error.hpp"
#include "cqad/run.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Thermal qubit / acoustic-resonator spectroscopy simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    int threads = 0;

    for (const char* name : {"dressed", "spectrum", "secular", "anticrossing", "tempsweep", "stark"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "key = value run description")->required();
        sub->add_option("--out", out_path, "output CSV path, '-' for stdout (overrides `output`)");
        sub->add_option("--threads", threads, "worker threads for grid points")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : cqad::kExitConfig;
    }

    const std::string subcommand = app.get_subcommands().front()->get_name();
    try {
        cqad::RunConfig config = cqad::load_config(config_path, cqad::parse_experiment(subcommand));
        if (!out_path.empty())
            config.output = out_path;
        if (threads > 0)
            config.threads = threads;

        // Buffer so a solver failure never leaves a truncated CSV behind.
        std::ostringstream csv;
        const int code = cqad::run_experiment(config, csv, std::cerr);
        cqad::emit_csv(config.output, [&](std::ostream& os) { os << csv.str(); });
        if (code == cqad::kExitUncertified)
            std::cerr << "warning: Fock truncation not certified\n";
        return code;
    } catch (const cqad::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return cqad::kExitConfig;
    } catch (const cqad::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return cqad::kExitIo;
    } catch (const cqad::Error& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return cqad::kExitSolver;
    }
}
