#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace cqad {

enum class Branch { Plus, Minus };

struct DressedLevel
{
    int n;
    Branch branch;
    double energy;
};

// Line families of the resonant ladder. Vacuum lines connect |g,0> to
// |1,+-> ; Inner/Outer lines connect |n+1,eta> to |n,xi>.
enum class LineKind {
    VacuumPlus,  // omega + g
    VacuumMinus, // omega - g
    Line1,       // omega + g (sqrt(n+1) - sqrt(n))
    Line2,       // omega - g (sqrt(n+1) - sqrt(n))
    Line3,       // omega + g (sqrt(n+1) + sqrt(n))
    Line4,       // omega - g (sqrt(n+1) + sqrt(n))
};

std::string_view to_string(LineKind kind);

struct TransitionLine
{
    int n; // excitation number of the lower level
    LineKind kind;
    double frequency;
    double relative_amplitude;
};

// E_{n,+-} = omega_r (n - 1/2) +- sqrt(delta^2 + 4 g^2 n) / 2, returned as {plus, minus}.
std::pair<double, double> dressed_energies(int n, double omega_r, double delta, double g);

std::pair<DressedLevel, DressedLevel> dressed_levels(int n, double omega_r, double delta, double g);

// theta_n = atan2(2 g sqrt(n), delta) / 2
double mixing_angle(int n, double delta, double g);

// C^n_{eta,xi} = sqrt(n+1) + s_eta s_xi sqrt(n)
double ladder_coefficient(int n, Branch upper, Branch lower);

// Frequency of |n+1,upper> -> |n,lower> at resonance:
// omega + s_upper sqrt(n+1) g - s_lower sqrt(n) g
double ladder_frequency(int n, Branch upper, Branch lower, double omega, double g);

// Resonant (delta = 0) transition lines: the two vacuum lines followed by the
// four lines of every 1 <= n <= n_max.
std::vector<TransitionLine> transition_lines(int n_max, double omega, double g);

} // namespace cqad
