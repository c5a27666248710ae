#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cqad/device.hpp"
#include "cqad/steady_state.hpp"

namespace cqad {

// Input power that puts one phonon in the resonator on average.
inline constexpr double kOnePhononPowerDbm = -134.0;

// Decade rule anchored at kOnePhononPowerDbm.
double phonon_from_power(double power_dbm);

struct StarkScan
{
    std::vector<double> power_grid;         // dBm
    std::vector<double> drive_frequencies;  // MHz, shared by every trace
    std::vector<double> phonon_numbers;
    std::vector<double> shifted_qubit_freq; // MHz
    std::vector<std::vector<double>> qubit_response; // |r| per power, per drive frequency
    bool dispersive_warning = false;
};

struct StarkOptions
{
    double extinction = 1.0;
};

// Dispersive (Stark + Lamb) qubit line under a coherent phonon population,
// with a Lorentzian reflection dip of half-width gamma_q / 2.
StarkScan stark_scan(const DeviceParams& params, double qubit_freq, std::span<const double> power_grid,
                     std::span<const double> drive_frequencies, const StarkOptions& options = {});

// Flux in (0, 0.5) with qubit_frequency == omega_r, by bisection to 1e-6.
double resonance_flux(const DeviceParams& params);

// Flux on the positive branch with qubit_frequency == target (bisection to 1e-12).
double flux_for_qubit_frequency(const DeviceParams& params, double target_mhz);

// `points` fluxes covering |omega_a - omega_r| <= window_mhz on the positive branch.
std::vector<double> default_flux_grid(const DeviceParams& params, int points = 81, double window_mhz = 120.0);

// 401 points spanning omega_r +- 60 MHz.
std::vector<double> default_probe_grid(const DeviceParams& params, int points = 401, double half_span_mhz = 60.0);

struct AnticrossingMap
{
    std::vector<double> flux_grid;
    std::vector<double> probe_grid;
    std::vector<double> qubit_freqs;
    std::vector<std::vector<Complex>> t_grid; // [flux][probe]
    double temperature = 0.0;
    bool truncation_certified = true;
    StateDiagnostics worst_state;
};

AnticrossingMap anticrossing_map(const DeviceParams& params, std::span<const double> flux_grid,
                                 std::span<const double> probe_grid, double temperature,
                                 const SpectrumOptions& options = {});

// Distance between the two most prominent peaks of one map row, if any.
std::optional<double> row_splitting(const AnticrossingMap& map, std::size_t row, double prominence = 0.05);

struct SplittingSummary
{
    std::size_t row = 0;
    double flux = 0.0;
    double splitting = 0.0;
};

// Row with the smallest two-peak splitting.
std::optional<SplittingSummary> minimum_splitting(const AnticrossingMap& map, double prominence = 0.05);

struct TemperaturePoint
{
    double temperature;
    SpectrumResult spectrum;
};

// Resonant spectrum at each temperature, each with its own certified cutoff.
std::vector<TemperaturePoint> temperature_series(const DeviceParams& params, std::span<const double> temps,
                                                 std::span<const double> probe_grid,
                                                 const SpectrumOptions& options = {});

} // namespace cqad
