#include "cqad/steady_state.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseLU>
#include <Eigen/IterativeLinearSolvers>

#include "cqad/error.hpp"

namespace cqad {

DensityMatrix::DensityMatrix(HilbertSpace space, Matrix entries)
    : space_(std::move(space)), entries_(std::move(entries))
{
    if (entries_.rows() != space_.total_dim() || entries_.cols() != space_.total_dim())
        throw InvalidDimension("density matrix does not match its space");
}

DensityMatrix DensityMatrix::symmetrized(HilbertSpace space, const Matrix& raw)
{
    Matrix herm = 0.5 * (raw + raw.adjoint());
    return DensityMatrix(std::move(space), std::move(herm));
}

StateDiagnostics DensityMatrix::diagnostics() const
{
    StateDiagnostics out;
    out.hermiticity_defect = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    out.trace_error = std::abs(entries_.trace() - Complex(1.0));
    const Matrix herm = 0.5 * (entries_ + entries_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(herm, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = eig.eigenvalues().minCoeff();
    return out;
}

std::vector<double> DensityMatrix::populations(int slot) const
{
    const auto& dims = space_.factor_dims();
    if (slot < 0 || slot >= space_.rank())
        throw InvalidDimension("population slot out of range");
    // stride of the chosen factor in the row-major product index
    int stride = 1;
    for (int k = slot + 1; k < space_.rank(); ++k)
        stride *= dims[k];
    std::vector<double> pops(dims[slot], 0.0);
    for (int i = 0; i < dim(); ++i)
        pops[(i / stride) % dims[slot]] += entries_(i, i).real();
    return pops;
}

namespace {

using LU = Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>>;

// Caches the symbolic analysis for as long as the sparsity pattern repeats.
class PatternCachedLU
{
public:
    bool factorize(const SparseMatrix& a)
    {
        if (!same_pattern(a)) {
            lu_.analyzePattern(a);
            outer_.assign(a.outerIndexPtr(), a.outerIndexPtr() + a.outerSize() + 1);
            inner_.assign(a.innerIndexPtr(), a.innerIndexPtr() + a.nonZeros());
            analyzed_ = true;
        }
        lu_.factorize(a);
        return lu_.info() == Eigen::Success;
    }

    LU& lu() { return lu_; }

private:
    bool same_pattern(const SparseMatrix& a) const
    {
        if (!analyzed_ || static_cast<std::size_t>(a.nonZeros()) != inner_.size() ||
            static_cast<std::size_t>(a.outerSize() + 1) != outer_.size())
            return false;
        return std::equal(outer_.begin(), outer_.end(), a.outerIndexPtr()) &&
               std::equal(inner_.begin(), inner_.end(), a.innerIndexPtr());
    }

    LU lu_;
    bool analyzed_ = false;
    std::vector<int> outer_;
    std::vector<int> inner_;
};

// Adapter exposing an already factorized LU as an Eigen preconditioner.
class FactorizedPreconditioner
{
public:
    using MatrixType = SparseMatrix;

    FactorizedPreconditioner() = default;

    void attach(LU* lu) { lu_ = lu; }

    template <typename M>
    FactorizedPreconditioner& analyzePattern(const M&) { return *this; }
    template <typename M>
    FactorizedPreconditioner& factorize(const M&) { return *this; }
    template <typename M>
    FactorizedPreconditioner& compute(const M&) { return *this; }

    template <typename Rhs>
    Vector solve(const Rhs& b) const { return lu_->solve(b); }

    Eigen::ComputationInfo info() const { return lu_ ? Eigen::Success : Eigen::InvalidInput; }

private:
    LU* lu_ = nullptr;
};

// L with its first row (the d rho(0,0)/dt equation) replaced by the trace functional.
SparseMatrix with_trace_row(const SparseMatrix& l, int dim)
{
    const Eigen::Index n = l.rows();
    SparseMatrix a(n, n);
    Eigen::VectorXi per_column(n);
    for (Eigen::Index k = 0; k < n; ++k)
        per_column(k) = static_cast<int>(l.outerIndexPtr()[k + 1] - l.outerIndexPtr()[k]) + 1;
    a.reserve(per_column);
    for (Eigen::Index k = 0; k < n; ++k) {
        const bool diagonal_element = (k % (dim + 1)) == 0;
        if (diagonal_element)
            a.insert(0, k) = 1.0;
        for (SparseMatrix::InnerIterator it(l, k); it; ++it)
            if (it.row() != 0)
                a.insert(it.row(), k) = it.value();
    }
    a.makeCompressed();
    return a;
}

constexpr double kKrylovTolerance = 1e-14;
constexpr int kKrylovMaxIterations = 200;
constexpr int kStationaryIterations = 30;

} // namespace

struct SteadyStateSolver::Impl
{
    PatternCachedLU preconditioner_lu;
    PatternCachedLU direct_lu;
    Eigen::BiCGSTAB<SparseMatrix, FactorizedPreconditioner> krylov;

    // The constrained system A x = e_0 is solved iteratively, preconditioned
    // with the LU of its undriven counterpart; a full LU of A is the fallback.
    Vector solve(const SparseMatrix& a, const SparseMatrix* undriven, const Vector& rhs)
    {
        if (undriven && undriven->nonZeros() > 0) {
            if (!preconditioner_lu.factorize(*undriven))
                throw NonUniqueSteadyState("undriven steady-state system is singular after the trace constraint");
            auto& p = preconditioner_lu.lu();
            const double target = kKrylovTolerance * rhs.norm();

            // The drive is weak, so the splitting A = P + (A - P) usually
            // converges as a stationary iteration within a few steps.
            Vector x = p.solve(rhs);
            for (int it = 0; it < kStationaryIterations && x.allFinite(); ++it) {
                const Vector r = rhs - a * x;
                if (r.norm() <= target)
                    return x;
                x += p.solve(r);
            }

            krylov.preconditioner().attach(&p);
            krylov.setTolerance(kKrylovTolerance);
            krylov.setMaxIterations(kKrylovMaxIterations);
            krylov.compute(a);
            if (!x.allFinite())
                x = p.solve(rhs);
            x = krylov.solveWithGuess(rhs, x);
            if (krylov.info() == Eigen::Success && x.allFinite())
                return x;
        }
        if (!direct_lu.factorize(a))
            throw NonUniqueSteadyState("steady-state system is singular after the trace constraint");
        return direct_lu.lu().solve(rhs);
    }
};

SteadyStateSolver::SteadyStateSolver() : impl_(std::make_unique<Impl>()) {}
SteadyStateSolver::~SteadyStateSolver() = default;
SteadyStateSolver::SteadyStateSolver(SteadyStateSolver&&) noexcept = default;
SteadyStateSolver& SteadyStateSolver::operator=(SteadyStateSolver&&) noexcept = default;

DensityMatrix SteadyStateSolver::solve(const Liouvillian& liouvillian)
{
    const int d = liouvillian.dim();
    const SparseMatrix a = with_trace_row(liouvillian.matrix, d);
    Vector rhs = Vector::Zero(a.rows());
    rhs(0) = 1.0;

    Vector x;
    if (liouvillian.undriven.nonZeros() > 0) {
        const SparseMatrix p = with_trace_row(liouvillian.undriven, d);
        x = impl_->solve(a, &p, rhs);
    } else {
        x = impl_->solve(a, nullptr, rhs);
    }
    if (!x.allFinite() || x.norm() > 1e6)
        throw NonUniqueSteadyState("steady state is not unique");

    const double residual = (liouvillian.matrix * x).norm();
    const double scale = liouvillian.matrix.norm();
    if (residual > 1e-8 * scale)
        throw ConvergenceError("steady-state residual " + std::to_string(residual) +
                               " exceeds 1e-8 * ||L|| = " + std::to_string(1e-8 * scale));

    return DensityMatrix::symmetrized(liouvillian.space, unvectorize(x, d));
}

DensityMatrix solve_steady_state(const Liouvillian& liouvillian)
{
    SteadyStateSolver solver;
    return solver.solve(liouvillian);
}

Complex transmission(const DensityMatrix& rho, const DeviceParams& params)
{
    if (params.epsilon == 0.0)
        throw UndefinedTransmission("transmission undefined for zero probe strength");
    const Operator a = resonator_lowering(params);
    return Complex(0.0, params.kappa) * expectation(a, rho) / params.epsilon;
}

namespace {

void require_grid(std::span<const double> grid)
{
    if (grid.empty())
        throw InvalidArgument("probe grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw InvalidArgument("probe grid must be strictly increasing");
}

void merge_worst(StateDiagnostics& worst, const StateDiagnostics& d)
{
    worst.hermiticity_defect = std::max(worst.hermiticity_defect, d.hermiticity_defect);
    worst.trace_error = std::max(worst.trace_error, d.trace_error);
    worst.min_eigenvalue = std::min(worst.min_eigenvalue, d.min_eigenvalue);
}

} // namespace

SpectrumResult spectrum(const DeviceParams& params, double qubit_freq, std::span<const double> probe_grid,
                        const SpectrumOptions& options)
{
    require_grid(probe_grid);
    const LiouvillianFamily family(params, qubit_freq);

    SpectrumResult out;
    out.probe_frequencies.assign(probe_grid.begin(), probe_grid.end());
    out.t_values.resize(probe_grid.size());
    out.params_snapshot = params;
    out.qubit_freq = qubit_freq;
    out.worst_state.min_eigenvalue = 0.0;

    const std::size_t n = probe_grid.size();
    const int threads = std::clamp(options.threads, 1, static_cast<int>(n));
    std::vector<StateDiagnostics> diags(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        SteadyStateSolver solver;
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                const DensityMatrix rho = solver.solve(family.at(probe_grid[i]));
                diags[i] = rho.diagnostics();
                out.t_values[i] = transmission(rho, params);
            } catch (const std::exception& e) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::make_exception_ptr(
                        SweepError(std::string(e.what()) + " (probe " + std::to_string(probe_grid[i]) + " MHz)",
                                   0.0, probe_grid[i]));
                next = n;
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int k = 0; k < threads; ++k)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    for (const auto& d : diags)
        merge_worst(out.worst_state, d);

    if (options.certify) {
        std::size_t peak = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(out.t_values[i]) > std::abs(out.t_values[peak]))
                peak = i;
        out.truncation_certified = certify_truncation(params, qubit_freq, probe_grid[peak]);
    }
    return out;
}

TruncationReport truncation_report(const DeviceParams& params, double qubit_freq, double probe)
{
    TruncationReport report;
    const DensityMatrix rho = solve_steady_state(build_liouvillian(params, qubit_freq, probe));
    const auto pops = rho.populations(1);
    report.top_population = pops.back();
    report.second_population = pops[pops.size() - 2];

    DeviceParams bigger = params;
    bigger.fock_cutoff += 5;
    const DensityMatrix rho_big = solve_steady_state(build_liouvillian(bigger, qubit_freq, probe));

    if (params.epsilon > 0.0)
        report.delta_abs_t =
            std::abs(std::abs(transmission(rho, params)) - std::abs(transmission(rho_big, bigger)));

    report.certified = report.delta_abs_t < 1e-4 && report.top_population < 1e-6 &&
                       report.second_population < 1e-6;
    return report;
}

bool certify_truncation(const DeviceParams& params, double qubit_freq, double probe)
{
    try {
        return truncation_report(params, qubit_freq, probe).certified;
    } catch (const Error&) {
        return false;
    }
}

int default_fock_cutoff(const DeviceParams& params)
{
    const double nth = bose_einstein(params.omega_r, params.temperature);
    return std::max(10, static_cast<int>(std::ceil(8.0 * nth + 8.0)));
}

std::pair<int, bool> certified_fock_cutoff(const DeviceParams& params, double qubit_freq,
                                           std::span<const double> probes, int max_cutoff)
{
    DeviceParams p = params;
    for (;;) {
        const bool ok = std::all_of(probes.begin(), probes.end(),
                                    [&](double w) { return certify_truncation(p, qubit_freq, w); });
        if (ok || p.fock_cutoff + 5 > max_cutoff)
            return {p.fock_cutoff, ok};
        p.fock_cutoff += 5;
    }
}

std::vector<Peak> find_peaks(std::span<const double> x, std::span<const double> y, double prominence)
{
    if (x.size() != y.size())
        throw InvalidArgument("find_peaks: x and y differ in length");
    if (!(prominence > 0.0))
        throw InvalidArgument("prominence must be positive");
    std::vector<Peak> peaks;
    const std::size_t n = y.size();
    if (n < 3)
        return peaks;
    const double ymax = *std::max_element(y.begin(), y.end());
    const double threshold = prominence * ymax;

    std::size_t i = 1;
    while (i + 1 < n) {
        if (!(y[i] > y[i - 1])) {
            ++i;
            continue;
        }
        // plateau: advance to its right edge
        std::size_t right = i;
        while (right + 1 < n && y[right + 1] == y[i])
            ++right;
        if (right + 1 >= n || !(y[right + 1] < y[i])) {
            i = right + 1;
            continue;
        }
        const std::size_t center = (i + right) / 2;
        const double h = y[i];

        double left_min = h;
        for (std::size_t k = i; k-- > 0;) {
            if (y[k] > h)
                break;
            left_min = std::min(left_min, y[k]);
        }
        double right_min = h;
        for (std::size_t k = right + 1; k < n; ++k) {
            if (y[k] > h)
                break;
            right_min = std::min(right_min, y[k]);
        }
        const double prom = h - std::max(left_min, right_min);

        if (prom >= threshold) {
            double freq = x[center];
            double height = h;
            if (i == right) {
                const double y0 = y[center - 1], y1 = y[center], y2 = y[center + 1];
                const double denom = y0 - 2.0 * y1 + y2;
                if (denom < 0.0) {
                    const double shift = 0.5 * (y0 - y2) / denom; // in samples, |shift| <= 1/2
                    const double step = 0.5 * (x[center + 1] - x[center - 1]);
                    freq = x[center] + shift * step;
                    height = y1 - 0.25 * (y0 - y2) * shift;
                }
            }
            peaks.push_back({freq, height});
        }
        i = right + 1;
    }
    return peaks;
}

std::vector<Peak> find_peaks(const SpectrumResult& spectrum, double prominence)
{
    std::vector<double> mag(spectrum.t_values.size());
    std::transform(spectrum.t_values.begin(), spectrum.t_values.end(), mag.begin(),
                   [](Complex t) { return std::abs(t); });
    return find_peaks(spectrum.probe_frequencies, mag, prominence);
}

std::vector<double> linspace(double lo, double hi, int points)
{
    if (points < 1)
        throw InvalidArgument("linspace needs at least one point");
    std::vector<double> out(points);
    if (points == 1) {
        out[0] = lo;
        return out;
    }
    const double step = (hi - lo) / (points - 1);
    for (int i = 0; i < points; ++i)
        out[i] = lo + step * i;
    out.back() = hi;
    return out;
}

} // namespace cqad
