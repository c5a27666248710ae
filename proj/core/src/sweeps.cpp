#include "cqad/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cqad/error.hpp"

namespace cqad {

double phonon_from_power(double power_dbm) { return std::pow(10.0, (power_dbm - kOnePhononPowerDbm) / 10.0); }

StarkScan stark_scan(const DeviceParams& params, double qubit_freq, std::span<const double> power_grid,
                     std::span<const double> drive_frequencies, const StarkOptions& options)
{
    const double detuning = qubit_freq - params.omega_r;
    if (detuning == 0.0)
        throw DispersiveInvalid("stark scan needs a detuned qubit");
    for (std::size_t i = 1; i < power_grid.size(); ++i)
        if (!(power_grid[i] > power_grid[i - 1]))
            throw InvalidArgument("power grid must be strictly increasing");

    StarkScan scan;
    scan.power_grid.assign(power_grid.begin(), power_grid.end());
    scan.drive_frequencies.assign(drive_frequencies.begin(), drive_frequencies.end());
    scan.dispersive_warning = dispersive_warning(detuning, params.g);

    const double half_width = 0.5 * params.gamma_q;
    for (double power : power_grid) {
        const double n = phonon_from_power(power);
        const double center = qubit_freq + stark_lamb_shift(n, detuning, params.g);
        scan.phonon_numbers.push_back(n);
        scan.shifted_qubit_freq.push_back(center);

        std::vector<double> trace;
        trace.reserve(drive_frequencies.size());
        for (double w : drive_frequencies) {
            const Complex lorentz = half_width / Complex(half_width, w - center);
            trace.push_back(std::abs(1.0 - options.extinction * lorentz));
        }
        scan.qubit_response.push_back(std::move(trace));
    }
    return scan;
}

namespace {

// qubit_frequency decreases monotonically on (0, 0.5)
double bisect_flux(const DeviceParams& params, double target, double tol)
{
    double lo = 0.0;
    double hi = 0.5 - 1e-12;
    if (qubit_frequency(params, lo) < target)
        throw InvalidArgument("target frequency exceeds the sweet-spot qubit frequency");
    if (qubit_frequency(params, hi) > target)
        throw InvalidArgument("target frequency below the tunable range");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (qubit_frequency(params, mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double resonance_flux(const DeviceParams& params) { return bisect_flux(params, params.omega_r, 1e-6); }

double flux_for_qubit_frequency(const DeviceParams& params, double target_mhz)
{
    return bisect_flux(params, target_mhz, 1e-12);
}

std::vector<double> default_flux_grid(const DeviceParams& params, int points, double window_mhz)
{
    const double lo = flux_for_qubit_frequency(params, params.omega_r + window_mhz);
    const double hi = flux_for_qubit_frequency(params, params.omega_r - window_mhz);
    return linspace(lo, hi, points);
}

std::vector<double> default_probe_grid(const DeviceParams& params, int points, double half_span_mhz)
{
    return linspace(params.omega_r - half_span_mhz, params.omega_r + half_span_mhz, points);
}

AnticrossingMap anticrossing_map(const DeviceParams& params, std::span<const double> flux_grid,
                                 std::span<const double> probe_grid, double temperature,
                                 const SpectrumOptions& options)
{
    if (flux_grid.empty() || probe_grid.empty())
        throw InvalidArgument("anticrossing grids must be nonempty");

    DeviceParams p = params;
    p.temperature = temperature;

    AnticrossingMap map;
    map.flux_grid.assign(flux_grid.begin(), flux_grid.end());
    map.probe_grid.assign(probe_grid.begin(), probe_grid.end());
    map.temperature = temperature;

    for (double flux : flux_grid) {
        const double wq = qubit_frequency(p, flux);
        SpectrumResult row;
        try {
            row = spectrum(p, wq, probe_grid, options);
        } catch (const SweepError& e) {
            throw SweepError(std::string(e.what()) + " (flux " + std::to_string(flux) + ")", flux, e.probe_mhz());
        }
        map.qubit_freqs.push_back(wq);
        map.t_grid.push_back(std::move(row.t_values));
        map.truncation_certified = map.truncation_certified && (!options.certify || row.truncation_certified);
        map.worst_state.hermiticity_defect =
            std::max(map.worst_state.hermiticity_defect, row.worst_state.hermiticity_defect);
        map.worst_state.trace_error = std::max(map.worst_state.trace_error, row.worst_state.trace_error);
        map.worst_state.min_eigenvalue = std::min(map.worst_state.min_eigenvalue, row.worst_state.min_eigenvalue);
    }
    return map;
}

std::optional<double> row_splitting(const AnticrossingMap& map, std::size_t row, double prominence)
{
    const auto& ts = map.t_grid.at(row);
    std::vector<double> mag(ts.size());
    std::transform(ts.begin(), ts.end(), mag.begin(), [](Complex t) { return std::abs(t); });
    auto peaks = find_peaks(map.probe_grid, mag, prominence);
    if (peaks.size() < 2)
        return std::nullopt;
    std::partial_sort(peaks.begin(), peaks.begin() + 2, peaks.end(),
                      [](const Peak& a, const Peak& b) { return a.height > b.height; });
    return std::abs(peaks[0].frequency - peaks[1].frequency);
}

std::optional<SplittingSummary> minimum_splitting(const AnticrossingMap& map, double prominence)
{
    std::optional<SplittingSummary> best;
    for (std::size_t r = 0; r < map.t_grid.size(); ++r) {
        const auto s = row_splitting(map, r, prominence);
        if (s && (!best || *s < best->splitting))
            best = SplittingSummary{r, map.flux_grid[r], *s};
    }
    return best;
}

std::vector<TemperaturePoint> temperature_series(const DeviceParams& params, std::span<const double> temps,
                                                 std::span<const double> probe_grid, const SpectrumOptions& options)
{
    const double flux = resonance_flux(params);
    const double wq = qubit_frequency(params, flux);

    std::vector<TemperaturePoint> series;
    series.reserve(temps.size());
    for (double temp : temps) {
        DeviceParams p = params;
        p.temperature = temp;
        p.fock_cutoff = std::max(params.fock_cutoff, default_fock_cutoff(p));
        const double probes[] = {p.omega_r};
        p.fock_cutoff = certified_fock_cutoff(p, wq, probes).first;
        series.push_back({temp, spectrum(p, wq, probe_grid, options)});
    }
    return series;
}

} // namespace cqad
