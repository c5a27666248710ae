#pragma once

#include <optional>

#include "cqad/algebra.hpp"

namespace cqad {

// h / k_B expressed in mK per GHz.
inline constexpr double kPlanckOverBoltzmannMilliKelvinPerGHz = 47.9924;

// Physical constants of the coupled qubit/acoustic-resonator device.
// Every frequency and rate is a linear frequency in MHz (the value that
// multiplies 2*pi in angular units); temperature is in mK.
struct DeviceParams
{
    double omega_r = 3162.0;
    double g = 18.5;
    double kappa = 1.56;
    double gamma_q = 10.48;
    double E_C = 160.0;
    double E_J_max = 22880.0;
    int transmon_levels = 5;
    int fock_cutoff = 10;
    double epsilon = 1.56 / 20.0;
    double temperature = 16.5;

    // Throws InvalidArgument / InvalidDimension when a field is out of range.
    void validate() const;

    // Weaker check used by the operator builders: valid cutoffs, finite
    // non-negative rates and couplings. Allows g = 0 and zero damping, which
    // the decoupled and Hamiltonian-only limits need.
    void check_buildable() const;

    HilbertSpace space() const;

    bool operator==(const DeviceParams&) const = default;
};

// Probe rotating frame. An empty probe frequency means the lab frame.
struct FrameSpec
{
    std::optional<double> probe_frequency;

    static FrameSpec lab() { return {}; }
    static FrameSpec rotating(double probe_mhz);
};

double josephson_energy(const DeviceParams& params, double flux);

// sqrt(8 E_C E_J(flux)) - E_C. Throws DegenerateQubit when E_J(flux) == 0.
double qubit_frequency(const DeviceParams& params, double flux);

// Mean Bose-Einstein occupation at linear frequency `freq_mhz`; exactly 0 at T = 0.
double bose_einstein(double freq_mhz, double temperature_mk);

// h * nu / k_B in mK.
double crossover_temperature(double freq_mhz);

// Dispersive qubit shift 2 n g^2 / Delta + g^2 / Delta. Throws
// DispersiveInvalid when detuning == 0.
double stark_lamb_shift(double n, double detuning_mhz, double g);

// True when |detuning| < 10 g, i.e. the dispersive formulas are suspect.
bool dispersive_warning(double detuning_mhz, double g);

// Transmon Duffing ladder coupled to a truncated resonator in RWA form.
// In a rotating frame the excitation-number operator times the probe
// frequency is subtracted.
Operator build_hamiltonian(const DeviceParams& params, double qubit_freq, const FrameSpec& frame);

// (epsilon / 2) * (1 (x) (a^dag + a))
Operator build_probe(const DeviceParams& params);

// a^dag a + sum_l l |l><l| on the joint space.
Operator excitation_number(const DeviceParams& params);

// 1_transmon (x) a
Operator resonator_lowering(const DeviceParams& params);

} // namespace cqad
