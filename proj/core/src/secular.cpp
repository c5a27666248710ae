#include "cqad/secular.hpp"

#include <cmath>
#include <numbers>

#include "cqad/dressed.hpp"
#include "cqad/error.hpp"

namespace cqad {

namespace {

constexpr int kLevelCap = 10000;
constexpr double kTailPopulation = 1e-12;
constexpr double kTermCutoff = 1e-10;

} // namespace

double SecularRates::up(int n) const
{
    if (n < 1)
        throw InvalidArgument("upward ladder rate defined for n >= 1");
    return 0.25 * gamma_q * n_th_qubit + 0.25 * kappa * n_th * (2.0 * n + 1.0);
}

double SecularRates::down(int n) const
{
    if (n < 2)
        throw InvalidArgument("downward ladder rate defined for n >= 2");
    return 0.25 * gamma_q * (n_th_qubit + 1.0) + 0.25 * kappa * (n_th + 1.0) * (2.0 * n - 1.0);
}

SecularRates secular_rates(const DeviceParams& params, double qubit_freq)
{
    SecularRates r;
    r.gamma_q = params.gamma_q;
    r.kappa = params.kappa;
    r.n_th = bose_einstein(params.omega_r, params.temperature);
    r.n_th_qubit = bose_einstein(qubit_freq, params.temperature);
    r.gamma_g1 = 0.5 * r.gamma_q * r.n_th_qubit + 0.5 * r.kappa * r.n_th;
    r.gamma_1g = 0.5 * r.gamma_q * (r.n_th_qubit + 1.0) + 0.5 * r.kappa * (r.n_th + 1.0);
    return r;
}

SecularState secular_populations(const SecularRates& rates, int n_max)
{
    if (n_max < 1)
        throw InvalidArgument("n_max must be >= 1");

    // unnormalized, relative to rho_g = 1
    std::vector<double> rel;
    double weight = 1.0;
    for (int m = 1;; ++m) {
        const double num = rates.gamma_q * rates.n_th_qubit + rates.kappa * rates.n_th * (2.0 * m - 1.0);
        const double den =
            rates.gamma_q * (rates.n_th_qubit + 1.0) + rates.kappa * (rates.n_th + 1.0) * (2.0 * m - 1.0);
        weight *= num / den;
        rel.push_back(weight);
        if (m >= n_max && weight < kTailPopulation)
            break;
        if (m >= kLevelCap)
            throw ConvergenceError("secular populations do not converge within 1e4 levels");
    }

    double norm = 1.0;
    for (double w : rel)
        norm += 2.0 * w;

    SecularState s;
    s.rho_g = 1.0 / norm;
    s.rho_n.reserve(rel.size());
    for (double w : rel)
        s.rho_n.push_back(w / norm);
    return s;
}

SecularLinewidths secular_linewidths(const SecularRates& rates, int n_max)
{
    if (n_max < 1)
        throw InvalidArgument("n_max must be >= 1");
    SecularLinewidths lw;
    lw.beta = 0.5 * rates.gamma_1g + rates.up(1) + rates.gamma_g1;
    lw.alpha.reserve(n_max);
    lw.alpha.push_back(rates.down(2) + rates.up(2) + rates.up(1) + 0.5 * rates.gamma_1g);
    for (int n = 2; n <= n_max; ++n)
        lw.alpha.push_back(rates.down(n + 1) + rates.up(n + 1) + rates.up(n) + rates.down(n));
    return lw;
}

SecularState secular_state(const DeviceParams& params, double qubit_freq, int n_max)
{
    const SecularRates rates = secular_rates(params, qubit_freq);
    SecularState s = secular_populations(rates, n_max);
    const auto lw = secular_linewidths(rates, static_cast<int>(s.rho_n.size()));
    s.beta = lw.beta;
    s.alpha_n = lw.alpha;
    return s;
}

namespace {

Complex secular_mean_field(const DeviceParams& params, const SecularState& s, double probe)
{
    const Complex i(0.0, 1.0);
    const double omega = params.omega_r;
    const double g = params.g;
    const double eps = params.epsilon;

    // The probe H_p = eps (a + a^dag) / 2 has <1,eta|H_p|g,0> = eps / (2 sqrt 2)
    // and <n+1,eta|H_p|n,xi> = C eps / 4.
    Complex mean = 0.0;
    const double drive0 = eps / (2.0 * std::numbers::sqrt2) * (s.rho_g - s.population(1));
    for (Branch eta : {Branch::Plus, Branch::Minus}) {
        const double w = omega + (eta == Branch::Plus ? g : -g);
        const Complex coherence = -i * drive0 / (i * (w - probe) + s.beta);
        mean += coherence / std::numbers::sqrt2;
    }

    const int levels = static_cast<int>(s.rho_n.size());
    for (int n = 1; n < levels; ++n) {
        if (s.population(n) < kTermCutoff)
            break;
        const double inversion = s.population(n) - s.population(n + 1);
        const double alpha = s.alpha_n[n - 1];
        for (Branch eta : {Branch::Plus, Branch::Minus}) {
            for (Branch xi : {Branch::Plus, Branch::Minus}) {
                const double c = ladder_coefficient(n, eta, xi);
                const double w = ladder_frequency(n, eta, xi, omega, g);
                const Complex coherence = -i * (c * eps / 4.0) * inversion / (i * (w - probe) + alpha);
                mean += 0.5 * c * coherence;
            }
        }
    }
    return mean;
}

} // namespace

Complex secular_transmission(const DeviceParams& params, double qubit_freq, double probe, int n_max)
{
    if (params.epsilon == 0.0)
        throw UndefinedTransmission("transmission undefined for zero probe strength");
    const SecularState s = secular_state(params, qubit_freq, n_max);
    return Complex(0.0, params.kappa) * secular_mean_field(params, s, probe) / params.epsilon;
}

SpectrumResult secular_spectrum(const DeviceParams& params, double qubit_freq,
                                std::span<const double> probe_grid, int n_max)
{
    if (probe_grid.empty())
        throw InvalidArgument("probe grid is empty");
    if (params.epsilon == 0.0)
        throw UndefinedTransmission("transmission undefined for zero probe strength");
    const SecularState s = secular_state(params, qubit_freq, n_max);

    SpectrumResult out;
    out.probe_frequencies.assign(probe_grid.begin(), probe_grid.end());
    out.params_snapshot = params;
    out.qubit_freq = qubit_freq;
    out.truncation_certified = true;
    out.t_values.reserve(probe_grid.size());
    for (double w : probe_grid)
        out.t_values.push_back(Complex(0.0, params.kappa) * secular_mean_field(params, s, w) / params.epsilon);
    return out;
}

} // namespace cqad
