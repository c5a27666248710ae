#include "cqad/device.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "cqad/error.hpp"

namespace cqad {

namespace {

void require_positive(double value, const char* name)
{
    if (!(value > 0.0) || !std::isfinite(value))
        throw InvalidArgument(std::string(name) + " must be positive and finite");
}

} // namespace

void DeviceParams::validate() const
{
    require_positive(omega_r, "omega_r");
    require_positive(g, "g");
    require_positive(kappa, "kappa");
    require_positive(gamma_q, "gamma_q");
    require_positive(E_C, "E_C");
    require_positive(E_J_max, "E_J_max");
    if (transmon_levels < 2 || transmon_levels > 10)
        throw InvalidDimension("transmon_levels must lie in [2, 10]");
    if (fock_cutoff < 2)
        throw InvalidDimension("fock_cutoff must be >= 2");
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
        throw InvalidArgument("epsilon must be >= 0");
    if (!(temperature >= 0.0) || !std::isfinite(temperature))
        throw InvalidArgument("temperature must be >= 0");
}

void DeviceParams::check_buildable() const
{
    require_positive(omega_r, "omega_r");
    for (auto [value, name] : {std::pair{g, "g"}, {kappa, "kappa"}, {gamma_q, "gamma_q"},
                               {E_C, "E_C"}, {epsilon, "epsilon"}, {temperature, "temperature"}}) {
        if (!(value >= 0.0) || !std::isfinite(value))
            throw InvalidArgument(std::string(name) + " must be finite and >= 0");
    }
    if (transmon_levels < 2 || transmon_levels > 10)
        throw InvalidDimension("transmon_levels must lie in [2, 10]");
    if (fock_cutoff < 2)
        throw InvalidDimension("fock_cutoff must be >= 2");
}

HilbertSpace DeviceParams::space() const { return HilbertSpace{transmon_levels, fock_cutoff}; }

FrameSpec FrameSpec::rotating(double probe_mhz)
{
    if (!(probe_mhz > 0.0))
        throw InvalidArgument("probe frequency must be positive");
    return FrameSpec{probe_mhz};
}

double josephson_energy(const DeviceParams& params, double flux)
{
    return params.E_J_max * std::abs(std::cos(std::numbers::pi * flux));
}

double qubit_frequency(const DeviceParams& params, double flux)
{
    const double ej = josephson_energy(params, flux);
    // cos(pi/2) evaluates to ~6e-17, not zero
    if (ej <= 1e-12 * params.E_J_max)
        throw DegenerateQubit("Josephson energy vanishes at flux " + std::to_string(flux));
    return std::sqrt(8.0 * params.E_C * ej) - params.E_C;
}

double bose_einstein(double freq_mhz, double temperature_mk)
{
    if (temperature_mk <= 0.0)
        return 0.0;
    const double x = kPlanckOverBoltzmannMilliKelvinPerGHz * (freq_mhz * 1e-3) / temperature_mk;
    return 1.0 / std::expm1(x);
}

double crossover_temperature(double freq_mhz)
{
    return kPlanckOverBoltzmannMilliKelvinPerGHz * freq_mhz * 1e-3;
}

double stark_lamb_shift(double n, double detuning_mhz, double g)
{
    if (detuning_mhz == 0.0)
        throw DispersiveInvalid("dispersive shift undefined at zero detuning");
    const double chi = g * g / detuning_mhz;
    return 2.0 * n * chi + chi;
}

bool dispersive_warning(double detuning_mhz, double g) { return std::abs(detuning_mhz) < 10.0 * g; }

Operator build_hamiltonian(const DeviceParams& params, double qubit_freq, const FrameSpec& frame)
{
    params.check_buildable();
    const int levels = params.transmon_levels;
    const int nf = params.fock_cutoff;
    const HilbertSpace space = params.space();
    const int dim = space.total_dim();
    const double wp = frame.probe_frequency.value_or(0.0);

    Matrix h = Matrix::Zero(dim, dim);
    auto index = [nf](int l, int n) { return l * nf + n; };

    for (int l = 0; l < levels; ++l) {
        const double e_l = l * qubit_freq - 0.5 * params.E_C * l * (l - 1);
        for (int n = 0; n < nf; ++n)
            h(index(l, n), index(l, n)) = e_l + params.omega_r * n - wp * (l + n);
    }

    // g sqrt(l+1) sqrt(n+1) couples |l+1, n> and |l, n+1>
    for (int l = 0; l + 1 < levels; ++l) {
        const double gl = params.g * std::sqrt(static_cast<double>(l + 1));
        for (int n = 0; n + 1 < nf; ++n) {
            const double c = gl * std::sqrt(static_cast<double>(n + 1));
            h(index(l, n + 1), index(l + 1, n)) = c;
            h(index(l + 1, n), index(l, n + 1)) = c;
        }
    }
    return {space, std::move(h)};
}

Operator resonator_lowering(const DeviceParams& params)
{
    return embed(annihilation(params.fock_cutoff), params.space(), 1);
}

Operator build_probe(const DeviceParams& params)
{
    if (!(params.epsilon >= 0.0))
        throw InvalidArgument("epsilon must be >= 0");
    const Operator a = resonator_lowering(params);
    return (a + a.adjoint()) * Complex(0.5 * params.epsilon);
}

Operator excitation_number(const DeviceParams& params)
{
    const HilbertSpace space = params.space();
    const int nf = params.fock_cutoff;
    Matrix m = Matrix::Zero(space.total_dim(), space.total_dim());
    for (int l = 0; l < params.transmon_levels; ++l)
        for (int n = 0; n < nf; ++n)
            m(l * nf + n, l * nf + n) = static_cast<double>(l + n);
    return {space, std::move(m)};
}

} // namespace cqad
