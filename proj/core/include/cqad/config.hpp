#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cqad/device.hpp"

namespace cqad {

enum class Experiment { Dressed, Spectrum, Secular, Anticrossing, Tempsweep, Stark };

std::string_view to_string(Experiment e);
std::optional<Experiment> parse_experiment(std::string_view name);

struct GridSpec
{
    double min = 0.0;
    double max = 0.0;
    int points = 0;

    std::vector<double> values() const;
    bool operator==(const GridSpec&) const = default;
};

// Flat `key = value` run description. Units are fixed by key: frequencies and
// rates in MHz, temperature in mK, power in dBm, flux in flux quanta.
struct RunConfig
{
    Experiment experiment = Experiment::Spectrum;
    DeviceParams device;
    // fock_cutoff = auto: start from default_fock_cutoff and grow until certified
    bool auto_fock_cutoff = true;

    std::optional<double> qubit_freq;
    std::optional<double> flux;

    GridSpec probe;
    GridSpec flux_grid;
    std::vector<double> temperatures; // tempsweep only
    GridSpec power;
    GridSpec drive;
    int n_max = 5;
    double prominence = 0.05;
    double extinction = 1.0;
    int threads = 1;
    std::string output = "-";

    // Qubit frequency of the run: explicit, from flux, or omega_r.
    double resolved_qubit_freq() const;

    bool operator==(const RunConfig&) const = default;
};

// Throws ConfigError naming the key and 1-based line for missing, unknown,
// duplicate, non-numeric and out-of-range entries. When `experiment` is given
// it overrides (and must agree with) an `experiment` key in the text.
RunConfig parse_config(std::string_view text, std::optional<Experiment> experiment = std::nullopt);

RunConfig load_config(const std::string& path, std::optional<Experiment> experiment = std::nullopt);

// Inverse of parse_config: every field written explicitly, doubles at full precision.
std::string serialize(const RunConfig& config);

} // namespace cqad
