#pragma once

#include <span>
#include <vector>

#include "cqad/device.hpp"
#include "cqad/steady_state.hpp"

namespace cqad {

// Dressed-ladder transition rates of the two-level resonant model with all
// oscillating cross terms dropped.
struct SecularRates
{
    double gamma_q = 0.0;
    double kappa = 0.0;
    double n_th = 0.0;       // resonator occupation
    double n_th_qubit = 0.0; // qubit occupation

    double gamma_g1 = 0.0; // |g,0> -> |1,+-> (each)
    double gamma_1g = 0.0; // |1,+-> -> |g,0>

    // |n,.> -> |n+1,.>, n >= 1
    double up(int n) const;
    // |n,.> -> |n-1,.>, n >= 2
    double down(int n) const;
};

struct SecularState
{
    double rho_g = 0.0;
    std::vector<double> rho_n; // rho_n[k] is the population of each of |k+1,+->
    double beta = 0.0;
    std::vector<double> alpha_n; // alpha_n[k] is the linewidth alpha_{k+1}

    double population(int n) const { return n == 0 ? rho_g : rho_n.at(n - 1); }
};

SecularRates secular_rates(const DeviceParams& params, double qubit_freq);

// Fills rho_g and rho_n. The ladder is extended beyond n_max until the last
// population drops below 1e-12; more than 1e4 levels raises ConvergenceError.
SecularState secular_populations(const SecularRates& rates, int n_max);

struct SecularLinewidths
{
    double beta = 0.0;
    std::vector<double> alpha; // alpha[k] = alpha_{k+1}
};

SecularLinewidths secular_linewidths(const SecularRates& rates, int n_max);

// Populations and linewidths together, sized consistently.
SecularState secular_state(const DeviceParams& params, double qubit_freq, int n_max);

// First-order coherences at probe frequency `probe` assembled into <a>, then
// t = i kappa <a> / epsilon. Terms with rho_n < 1e-10 are dropped.
Complex secular_transmission(const DeviceParams& params, double qubit_freq, double probe, int n_max = 64);

SpectrumResult secular_spectrum(const DeviceParams& params, double qubit_freq,
                                std::span<const double> probe_grid, int n_max = 64);

} // namespace cqad
