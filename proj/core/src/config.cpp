#include "cqad/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "cqad/error.hpp"
#include "cqad/steady_state.hpp"
#include "cqad/sweeps.hpp"

namespace cqad {

namespace {

constexpr std::array<std::pair<Experiment, std::string_view>, 6> kExperimentNames{{
    {Experiment::Dressed, "dressed"},
    {Experiment::Spectrum, "spectrum"},
    {Experiment::Secular, "secular"},
    {Experiment::Anticrossing, "anticrossing"},
    {Experiment::Tempsweep, "tempsweep"},
    {Experiment::Stark, "stark"},
}};

constexpr std::string_view kKnownKeys[] = {
    "experiment", "omega_r",     "g",           "kappa",      "gamma_q",     "E_C",
    "E_J_max",    "transmon_levels", "fock_cutoff", "epsilon", "temperature", "qubit_freq",
    "flux",       "probe_min",   "probe_max",   "probe_points", "flux_min",  "flux_max",
    "flux_points", "power_min",  "power_max",   "power_points", "drive_min", "drive_max",
    "drive_points", "n_max",     "prominence",  "extinction", "threads",     "output",
};

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Entry
{
    std::string value;
    int line;
};

class Document
{
public:
    explicit Document(std::string_view text)
    {
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto nl = text.find('\n', pos);
            std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
            ++line_no;

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError("line " + std::to_string(line_no) + ": expected `key = value`", "", line_no);
            const std::string key(trim(line.substr(0, eq)));
            const std::string value(trim(line.substr(eq + 1)));
            if (key.empty())
                throw ConfigError("line " + std::to_string(line_no) + ": empty key", "", line_no);
            if (std::find(std::begin(kKnownKeys), std::end(kKnownKeys), key) == std::end(kKnownKeys))
                throw ConfigError("line " + std::to_string(line_no) + ": unknown key `" + key + "`", key, line_no);
            if (entries_.contains(key))
                throw ConfigError("line " + std::to_string(line_no) + ": duplicate key `" + key + "`", key, line_no);
            entries_.emplace(key, Entry{value, line_no});
        }
    }

    bool has(const std::string& key) const { return entries_.contains(key); }
    const Entry& at(const std::string& key) const { return entries_.at(key); }
    int line(const std::string& key) const { return has(key) ? at(key).line : 0; }

    [[noreturn]] void fail(const std::string& key, const std::string& why) const
    {
        const int ln = line(key);
        std::string where = ln > 0 ? "line " + std::to_string(ln) + ": " : "";
        throw ConfigError(where + "`" + key + "` " + why, key, ln);
    }

    double number(const std::string& key, std::string_view text) const
    {
        double v = 0.0;
        const auto* first = text.data();
        const auto* last = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v))
            fail(key, "is not a number: '" + std::string(text) + "'");
        return v;
    }

    double real(const std::string& key, double fallback) const
    {
        return has(key) ? number(key, at(key).value) : fallback;
    }

    int integer(const std::string& key, int fallback) const
    {
        if (!has(key))
            return fallback;
        const auto& text = at(key).value;
        int v = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
            fail(key, "is not an integer: '" + text + "'");
        return v;
    }

    std::vector<double> list(const std::string& key) const
    {
        std::vector<double> out;
        std::string_view rest = at(key).value;
        while (true) {
            const auto comma = rest.find(',');
            out.push_back(number(key, trim(rest.substr(0, comma))));
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
        return out;
    }

    void require(const std::string& key, Experiment e) const
    {
        if (!has(key))
            throw ConfigError("missing key `" + key + "` required by experiment " + std::string(to_string(e)), key, 0);
    }

private:
    std::map<std::string, Entry, std::less<>> entries_;
};

void check(bool ok, const Document& doc, const std::string& key, const std::string& why)
{
    if (!ok)
        doc.fail(key, why);
}

GridSpec read_grid(const Document& doc, const std::string& prefix, GridSpec fallback)
{
    GridSpec g{doc.real(prefix + "_min", fallback.min), doc.real(prefix + "_max", fallback.max),
               doc.integer(prefix + "_points", fallback.points)};
    check(g.points >= 1, doc, prefix + "_points", "must be >= 1");
    check(g.points == 1 || g.max > g.min, doc, prefix + "_max", "must exceed " + prefix + "_min");
    return g;
}

void put(std::ostringstream& os, std::string_view key, double v)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    os << key << " = " << std::string_view(buf.data(), ptr - buf.data()) << '\n';
}

void put(std::ostringstream& os, std::string_view key, int v) { os << key << " = " << v << '\n'; }

} // namespace

std::string_view to_string(Experiment e)
{
    for (const auto& [exp, name] : kExperimentNames)
        if (exp == e)
            return name;
    return "?";
}

std::optional<Experiment> parse_experiment(std::string_view name)
{
    for (const auto& [exp, n] : kExperimentNames)
        if (n == name)
            return exp;
    return std::nullopt;
}

std::vector<double> GridSpec::values() const { return linspace(min, max, points); }

double RunConfig::resolved_qubit_freq() const
{
    if (qubit_freq)
        return *qubit_freq;
    if (flux)
        return qubit_frequency(device, *flux);
    return device.omega_r;
}

RunConfig parse_config(std::string_view text, std::optional<Experiment> experiment)
{
    const Document doc(text);
    RunConfig c;

    if (doc.has("experiment")) {
        const auto named = parse_experiment(doc.at("experiment").value);
        if (!named)
            doc.fail("experiment", "names no known experiment: '" + doc.at("experiment").value + "'");
        if (experiment && *experiment != *named)
            doc.fail("experiment", "disagrees with the requested subcommand " + std::string(to_string(*experiment)));
        c.experiment = *named;
    } else if (experiment) {
        c.experiment = *experiment;
    } else {
        throw ConfigError("missing key `experiment`", "experiment", 0);
    }
    const Experiment e = c.experiment;

    DeviceParams& d = c.device;
    const DeviceParams defaults;
    d.omega_r = doc.real("omega_r", defaults.omega_r);
    d.g = doc.real("g", defaults.g);
    d.kappa = doc.real("kappa", defaults.kappa);
    d.gamma_q = doc.real("gamma_q", defaults.gamma_q);
    d.E_C = doc.real("E_C", defaults.E_C);
    d.E_J_max = doc.real("E_J_max", defaults.E_J_max);
    d.transmon_levels = doc.integer("transmon_levels", defaults.transmon_levels);
    d.epsilon = doc.real("epsilon", d.kappa / 20.0);

    for (const char* key : {"omega_r", "kappa", "gamma_q", "E_C", "E_J_max"}) {
        const double v = doc.real(key, 1.0);
        check(v > 0.0, doc, key, "must be positive");
    }
    // g = 0 is the decoupled resonator
    check(d.g >= 0.0, doc, "g", "must be >= 0");
    check(d.transmon_levels >= 2 && d.transmon_levels <= 10, doc, "transmon_levels", "must lie in [2, 10]");
    check(d.epsilon >= 0.0, doc, "epsilon", "must be >= 0");

    const bool needs_temperature = e == Experiment::Spectrum || e == Experiment::Secular ||
                                   e == Experiment::Anticrossing || e == Experiment::Tempsweep;
    if (needs_temperature)
        doc.require("temperature", e);
    if (e == Experiment::Tempsweep) {
        c.temperatures = doc.list("temperature");
        for (double t : c.temperatures)
            check(t >= 0.0, doc, "temperature", "must be >= 0");
        d.temperature = c.temperatures.front();
    } else {
        d.temperature = doc.real("temperature", defaults.temperature);
        check(d.temperature >= 0.0, doc, "temperature", "must be >= 0");
    }

    if (doc.has("fock_cutoff") && doc.at("fock_cutoff").value == "auto") {
        c.auto_fock_cutoff = true;
    } else if (doc.has("fock_cutoff")) {
        c.auto_fock_cutoff = false;
        d.fock_cutoff = doc.integer("fock_cutoff", 0);
        check(d.fock_cutoff >= 4, doc, "fock_cutoff", "must be >= 4");
    }
    if (c.auto_fock_cutoff)
        d.fock_cutoff = default_fock_cutoff(d);

    if (doc.has("qubit_freq") && doc.has("flux"))
        doc.fail("flux", "conflicts with qubit_freq; give one of them");
    if (doc.has("qubit_freq")) {
        c.qubit_freq = doc.real("qubit_freq", 0.0);
        check(*c.qubit_freq > 0.0, doc, "qubit_freq", "must be positive");
    }
    if (doc.has("flux")) {
        c.flux = doc.real("flux", 0.0);
        check(josephson_energy(d, *c.flux) > 1e-12 * d.E_J_max, doc, "flux", "puts the qubit at zero Josephson energy");
    }
    if (e == Experiment::Stark && !c.qubit_freq && !c.flux)
        throw ConfigError("missing key `qubit_freq` (or `flux`) required by experiment stark", "qubit_freq", 0);

    c.probe = read_grid(doc, "probe", {d.omega_r - 60.0, d.omega_r + 60.0, 401});
    check(c.probe.min > 0.0, doc, "probe_min", "must be positive");
    if (e == Experiment::Anticrossing) {
        const auto fallback = default_flux_grid(d);
        c.flux_grid = read_grid(doc, "flux", {fallback.front(), fallback.back(), 81});
    } else {
        c.flux_grid = read_grid(doc, "flux", {0.0, 0.0, 1});
    }
    c.power = read_grid(doc, "power", {-143.0, -103.0, 41});
    {
        // default drive window spans the Lamb-shifted line up to the largest Stark shift
        const double center = c.qubit_freq ? *c.qubit_freq : (c.flux ? qubit_frequency(d, *c.flux) : d.omega_r);
        const double detuning = center - d.omega_r;
        double lo = center - 60.0;
        double hi = center + 60.0;
        if (detuning != 0.0) {
            const double shift = stark_lamb_shift(phonon_from_power(c.power.max), detuning, d.g);
            lo += std::min(0.0, shift);
            hi += std::max(0.0, shift);
        }
        c.drive = read_grid(doc, "drive", {lo, hi, static_cast<int>(std::ceil(hi - lo)) + 1});
        check(c.drive.min > 0.0, doc, "drive_min", "must be positive");
    }

    c.n_max = doc.integer("n_max", 5);
    check(c.n_max >= 1, doc, "n_max", "must be >= 1");
    c.prominence = doc.real("prominence", 0.05);
    check(c.prominence > 0.0, doc, "prominence", "must be positive");
    c.extinction = doc.real("extinction", 1.0);
    check(c.extinction >= 0.0, doc, "extinction", "must be >= 0");
    c.threads = doc.integer("threads", 1);
    check(c.threads >= 1, doc, "threads", "must be >= 1");
    if (doc.has("output")) {
        c.output = doc.at("output").value;
        check(!c.output.empty(), doc, "output", "must not be empty");
    }
    return c;
}

RunConfig load_config(const std::string& path, std::optional<Experiment> experiment)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), experiment);
}

std::string serialize(const RunConfig& c)
{
    std::ostringstream os;
    const DeviceParams& d = c.device;
    os << "experiment = " << to_string(c.experiment) << '\n';
    put(os, "omega_r", d.omega_r);
    put(os, "g", d.g);
    put(os, "kappa", d.kappa);
    put(os, "gamma_q", d.gamma_q);
    put(os, "E_C", d.E_C);
    put(os, "E_J_max", d.E_J_max);
    put(os, "transmon_levels", d.transmon_levels);
    if (c.auto_fock_cutoff)
        os << "fock_cutoff = auto\n";
    else
        put(os, "fock_cutoff", d.fock_cutoff);
    put(os, "epsilon", d.epsilon);
    if (c.experiment == Experiment::Tempsweep) {
        os << "temperature = ";
        for (std::size_t i = 0; i < c.temperatures.size(); ++i) {
            std::array<char, 64> buf{};
            const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), c.temperatures[i]);
            (void)ec;
            os << (i ? ", " : "") << std::string_view(buf.data(), ptr - buf.data());
        }
        os << '\n';
    } else {
        put(os, "temperature", d.temperature);
    }
    if (c.qubit_freq)
        put(os, "qubit_freq", *c.qubit_freq);
    if (c.flux)
        put(os, "flux", *c.flux);
    for (auto [name, grid] : {std::pair{"probe", c.probe}, {"flux", c.flux_grid}, {"power", c.power}, {"drive", c.drive}}) {
        put(os, std::string(name) + "_min", grid.min);
        put(os, std::string(name) + "_max", grid.max);
        put(os, std::string(name) + "_points", grid.points);
    }
    put(os, "n_max", c.n_max);
    put(os, "prominence", c.prominence);
    put(os, "extinction", c.extinction);
    put(os, "threads", c.threads);
    os << "output = " << c.output << '\n';
    return os.str();
}

} // namespace cqad
