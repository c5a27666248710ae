#include "cqad/dressed.hpp"

#include <cmath>
#include <numbers>

#include "cqad/error.hpp"

namespace cqad {

namespace {

double sign(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

} // namespace

std::string_view to_string(LineKind kind)
{
    switch (kind) {
    case LineKind::VacuumPlus: return "vacuum+";
    case LineKind::VacuumMinus: return "vacuum-";
    case LineKind::Line1: return "1";
    case LineKind::Line2: return "2";
    case LineKind::Line3: return "3";
    case LineKind::Line4: return "4";
    }
    return "?";
}

std::pair<double, double> dressed_energies(int n, double omega_r, double delta, double g)
{
    if (n < 1)
        throw InvalidArgument("dressed levels start at n = 1");
    const double center = omega_r * (n - 0.5);
    const double half = 0.5 * std::sqrt(delta * delta + 4.0 * g * g * n);
    return {center + half, center - half};
}

std::pair<DressedLevel, DressedLevel> dressed_levels(int n, double omega_r, double delta, double g)
{
    const auto [plus, minus] = dressed_energies(n, omega_r, delta, g);
    return {DressedLevel{n, Branch::Plus, plus}, DressedLevel{n, Branch::Minus, minus}};
}

double mixing_angle(int n, double delta, double g)
{
    if (n < 1)
        throw InvalidArgument("mixing angle defined for n >= 1");
    return 0.5 * std::atan2(2.0 * g * std::sqrt(static_cast<double>(n)), delta);
}

double ladder_coefficient(int n, Branch upper, Branch lower)
{
    return std::sqrt(n + 1.0) + sign(upper) * sign(lower) * std::sqrt(static_cast<double>(n));
}

double ladder_frequency(int n, Branch upper, Branch lower, double omega, double g)
{
    return omega + sign(upper) * std::sqrt(n + 1.0) * g - sign(lower) * std::sqrt(static_cast<double>(n)) * g;
}

std::vector<TransitionLine> transition_lines(int n_max, double omega, double g)
{
    if (n_max < 1)
        throw InvalidArgument("n_max must be >= 1");

    std::vector<TransitionLine> lines;
    lines.reserve(2 + 4 * static_cast<std::size_t>(n_max));
    lines.push_back({0, LineKind::VacuumPlus, omega + g, 1.0});
    lines.push_back({0, LineKind::VacuumMinus, omega - g, 1.0});

    struct Combo
    {
        LineKind kind;
        Branch upper;
        Branch lower;
    };
    constexpr Combo combos[] = {
        {LineKind::Line1, Branch::Plus, Branch::Plus},
        {LineKind::Line2, Branch::Minus, Branch::Minus},
        {LineKind::Line3, Branch::Plus, Branch::Minus},
        {LineKind::Line4, Branch::Minus, Branch::Plus},
    };
    for (int n = 1; n <= n_max; ++n)
        for (const auto& c : combos)
            lines.push_back({n, c.kind, ladder_frequency(n, c.upper, c.lower, omega, g),
                             ladder_coefficient(n, c.upper, c.lower)});
    return lines;
}

} // namespace cqad
