#include "cqad/run.hpp"

#include "cqad/csv.hpp"
#include "cqad/dressed.hpp"
#include "cqad/secular.hpp"
#include "cqad/steady_state.hpp"
#include "cqad/sweeps.hpp"

namespace cqad {

namespace {

// Grows the cutoff until the state at omega_r is certified (auto mode) and
// returns the params to run with.
DeviceParams settle_cutoff(const RunConfig& c, double qubit_freq, std::ostream& log)
{
    DeviceParams p = c.device;
    if (c.auto_fock_cutoff) {
        const double probes[] = {p.omega_r};
        const auto [cutoff, ok] = certified_fock_cutoff(p, qubit_freq, probes);
        p.fock_cutoff = cutoff;
        log << "fock_cutoff " << cutoff << (ok ? " (certified)" : " (not certified)") << '\n';
    }
    return p;
}

int finish(std::ostream& out, bool certified)
{
    if (certified)
        return kExitOk;
    write_uncertified_marker(out);
    return kExitUncertified;
}

} // namespace

int run_experiment(const RunConfig& c, std::ostream& out, std::ostream& log)
{
    SpectrumOptions options;
    options.threads = c.threads;

    switch (c.experiment) {
    case Experiment::Dressed: {
        const auto lines = transition_lines(c.n_max, c.device.omega_r, c.device.g);
        write_dressed_csv(out, lines);
        return kExitOk;
    }
    case Experiment::Spectrum: {
        const double wq = c.resolved_qubit_freq();
        const DeviceParams p = settle_cutoff(c, wq, log);
        const auto grid = c.probe.values();
        const SpectrumResult s = spectrum(p, wq, grid, options);
        write_spectrum_csv(out, s);
        return finish(out, s.truncation_certified && s.worst_state.valid());
    }
    case Experiment::Secular: {
        const auto grid = c.probe.values();
        const SpectrumResult s = secular_spectrum(c.device, c.resolved_qubit_freq(), grid, std::max(c.n_max, 2));
        write_spectrum_csv(out, s);
        return kExitOk;
    }
    case Experiment::Anticrossing: {
        const auto fluxes = c.flux_grid.values();
        const double center_wq = qubit_frequency(c.device, fluxes[fluxes.size() / 2]);
        const DeviceParams p = settle_cutoff(c, center_wq, log);
        const auto probes = c.probe.values();
        const AnticrossingMap map = anticrossing_map(p, fluxes, probes, p.temperature, options);
        write_anticrossing_csv(out, map);
        if (const auto m = minimum_splitting(map, c.prominence))
            log << "minimum splitting " << format_number(m->splitting) << " MHz at flux "
                << format_number(m->flux) << '\n';
        return finish(out, map.truncation_certified && map.worst_state.valid());
    }
    case Experiment::Tempsweep: {
        const auto probes = c.probe.values();
        const auto series = temperature_series(c.device, c.temperatures, probes, options);
        write_tempsweep_csv(out, series);
        bool certified = true;
        for (const auto& point : series) {
            certified = certified && point.spectrum.truncation_certified && point.spectrum.worst_state.valid();
            log << "T " << format_number(point.temperature) << " mK: fock_cutoff "
                << point.spectrum.params_snapshot.fock_cutoff << ", " << find_peaks(point.spectrum, c.prominence).size()
                << " peaks\n";
        }
        return finish(out, certified);
    }
    case Experiment::Stark: {
        const auto powers = c.power.values();
        const auto drives = c.drive.values();
        const StarkScan scan = stark_scan(c.device, c.resolved_qubit_freq(), powers, drives, {c.extinction});
        if (scan.dispersive_warning)
            log << "warning: |qubit - omega_r| < 10 g, dispersive shift is approximate\n";
        write_stark_csv(out, scan);
        return kExitOk;
    }
    }
    return kExitOk;
}

} // namespace cqad
