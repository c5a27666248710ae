#pragma once

#include <memory>
#include <span>
#include <vector>

#include "cqad/algebra.hpp"
#include "cqad/device.hpp"
#include "cqad/lindblad.hpp"

namespace cqad {

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPsdTolerance = -1e-8;

struct StateDiagnostics
{
    double hermiticity_defect = 0.0;
    double trace_error = 0.0;
    double min_eigenvalue = 0.0;

    bool valid() const
    {
        return hermiticity_defect <= kHermitianTolerance && trace_error <= kTraceTolerance &&
               min_eigenvalue >= kPsdTolerance;
    }
};

class DensityMatrix
{
public:
    DensityMatrix(HilbertSpace space, Matrix entries);

    // Hermitian part (rho + rho^dag) / 2 of a raw solution.
    static DensityMatrix symmetrized(HilbertSpace space, const Matrix& raw);

    const HilbertSpace& space() const noexcept { return space_; }
    const Matrix& entries() const noexcept { return entries_; }
    int dim() const noexcept { return space_.total_dim(); }

    StateDiagnostics diagnostics() const;

    // Diagonal of the partial trace over every factor except `slot`.
    std::vector<double> populations(int slot) const;

private:
    HilbertSpace space_;
    Matrix entries_;
};

// Solves L vec(rho) = 0 with the population equation of rho(0,0) replaced by
// trace(rho) = 1. The symbolic factorization is computed on the first solve
// and reused for later Liouvillians with the same sparsity pattern.
class SteadyStateSolver
{
public:
    SteadyStateSolver();
    ~SteadyStateSolver();
    SteadyStateSolver(SteadyStateSolver&&) noexcept;
    SteadyStateSolver& operator=(SteadyStateSolver&&) noexcept;

    DensityMatrix solve(const Liouvillian& liouvillian);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

DensityMatrix solve_steady_state(const Liouvillian& liouvillian);

// t = i kappa <a> / epsilon. Throws UndefinedTransmission when epsilon == 0.
Complex transmission(const DensityMatrix& rho, const DeviceParams& params);

struct SpectrumResult
{
    std::vector<double> probe_frequencies;
    std::vector<Complex> t_values;
    DeviceParams params_snapshot;
    double qubit_freq = 0.0;
    bool truncation_certified = false;
    // Worst diagnostics over every solved grid point.
    StateDiagnostics worst_state;
};

struct SpectrumOptions
{
    int threads = 1;
    bool certify = true;
};

// One Liouvillian build + steady-state solve + transmission per grid point.
// Solver failures are rethrown as SweepError carrying the probe frequency.
SpectrumResult spectrum(const DeviceParams& params, double qubit_freq,
                        std::span<const double> probe_grid, const SpectrumOptions& options = {});

struct TruncationReport
{
    bool certified = false;
    double delta_abs_t = 0.0;
    double top_population = 0.0;
    double second_population = 0.0;
};

// Re-solves at fock_cutoff + 5 and compares |t|; also bounds the two highest
// Fock populations of the original solve.
TruncationReport truncation_report(const DeviceParams& params, double qubit_freq, double probe);
bool certify_truncation(const DeviceParams& params, double qubit_freq, double probe);

// max(10, ceil(8 n_th(omega_r, T) + 8))
int default_fock_cutoff(const DeviceParams& params);

// Starts from params.fock_cutoff and grows it in steps of 5 until every probe
// in `probes` is certified or `max_cutoff` is reached. Returns the cutoff and
// whether it is certified.
std::pair<int, bool> certified_fock_cutoff(const DeviceParams& params, double qubit_freq,
                                           std::span<const double> probes, int max_cutoff = 120);

struct Peak
{
    double frequency;
    double height;
};

// Local maxima of |t| with topographic prominence >= prominence * max|t|,
// refined by a parabola through the three samples around each maximum.
std::vector<Peak> find_peaks(const SpectrumResult& spectrum, double prominence);
std::vector<Peak> find_peaks(std::span<const double> x, std::span<const double> y, double prominence);

std::vector<double> linspace(double lo, double hi, int points);

} // namespace cqad
