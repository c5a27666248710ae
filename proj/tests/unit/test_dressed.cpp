#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <numbers>

#include "cqad/device.hpp"
#include "cqad/dressed.hpp"
#include "cqad/error.hpp"

using namespace cqad;

TEST(DressedEnergies, VacuumSplitting)
{
    const auto [plus, minus] = dressed_energies(1, 3162.0, 0.0, 18.5);
    EXPECT_NEAR(plus, 3162.0 / 2 + 18.5, 1e-9);
    EXPECT_NEAR(minus, 3162.0 / 2 - 18.5, 1e-9);
    EXPECT_NEAR(plus - minus, 37.0, 1e-9);
    EXPECT_THROW(dressed_energies(0, 3162.0, 0.0, 18.5), InvalidArgument);
}

TEST(DressedEnergies, DecoupledLimit)
{
    const auto [plus, minus] = dressed_energies(3, 3162.0, 40.0, 0.0);
    EXPECT_NEAR(plus, 3162.0 * 2.5 + 20.0, 1e-9);
    EXPECT_NEAR(minus, 3162.0 * 2.5 - 20.0, 1e-9);
}

// n-excitation block {|g,n>, |e,n-1>} of the two-level Hamiltonian, qubit at
// omega_r + delta. Lab energies sit (omega_r + delta) / 2 above the closed form.
TEST(DressedEnergies, MatchNumericalDiagonalization)
{
    DeviceParams p;
    p.transmon_levels = 2;
    p.fock_cutoff = 6;
    for (double delta : {0.0, 25.0, -70.0}) {
        const double wa = p.omega_r + delta;
        const Operator h = build_hamiltonian(p, wa, FrameSpec::lab());
        for (int n = 1; n <= 4; ++n) {
            const int gn = n, en = 6 + (n - 1);
            Eigen::Matrix2cd block;
            block << h(gn, gn), h(gn, en), h(en, gn), h(en, en);
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(block);
            const double offset = (p.omega_r + delta) / 2.0;
            const auto [plus, minus] = dressed_energies(n, p.omega_r, delta, p.g);
            EXPECT_NEAR(es.eigenvalues()(1) - offset, plus, 1e-8)
                << "n=" << n << " delta=" << delta;
            EXPECT_NEAR(es.eigenvalues()(0) - offset, minus, 1e-8);
        }
    }
}

TEST(DressedEnergies, SecondManifold)
{
    const auto [plus, minus] = dressed_energies(2, 3162.0, 0.0, 18.5);
    EXPECT_NEAR(plus, 3162.0 * 1.5 + 18.5 * std::sqrt(2.0), 1e-9);
    EXPECT_NEAR(minus, 3162.0 * 1.5 - 18.5 * std::sqrt(2.0), 1e-9);
}

TEST(MixingAngle, Limits)
{
    for (int n = 1; n < 6; ++n)
        EXPECT_NEAR(mixing_angle(n, 0.0, 18.5), std::numbers::pi / 4, 1e-15);
    EXPECT_NEAR(mixing_angle(1, 1e12, 18.5), 0.0, 1e-9);
    EXPECT_NEAR(mixing_angle(1, 37.0, 18.5), std::numbers::pi / 8, 1e-15);
    EXPECT_GE(mixing_angle(2, -1e9, 18.5), 0.0);
}

TEST(TransitionLines, FirstManifold)
{
    const auto lines = transition_lines(1, 3162.0, 18.5);
    ASSERT_EQ(lines.size(), 6u);
    auto freq = [&](LineKind k) {
        for (const auto& l : lines)
            if (l.kind == k)
                return l.frequency;
        return 0.0;
    };
    EXPECT_NEAR(freq(LineKind::VacuumPlus), 3162.0 + 18.5, 1e-9);
    EXPECT_NEAR(freq(LineKind::VacuumMinus), 3162.0 - 18.5, 1e-9);
    EXPECT_NEAR(freq(LineKind::Line1), 3162.0 + 7.663, 1e-3);
    EXPECT_NEAR(freq(LineKind::Line2), 3162.0 - 7.663, 1e-3);
    EXPECT_NEAR(freq(LineKind::Line3), 3162.0 + 44.66, 1e-2);
    EXPECT_NEAR(freq(LineKind::Line4), 3162.0 - 44.66, 1e-2);
}

TEST(TransitionLines, InnerOffsetShrinks)
{
    const auto lines = transition_lines(400, 0.0, 18.5);
    const auto& last = lines[lines.size() - 4];
    ASSERT_EQ(last.kind, LineKind::Line1);
    const int n = last.n;
    EXPECT_NEAR(last.frequency, 18.5 / (2.0 * std::sqrt(n)), 1e-3);
}

TEST(TransitionLines, AmplitudeRatio)
{
    const double inner = ladder_coefficient(1, Branch::Plus, Branch::Plus);
    const double outer = ladder_coefficient(1, Branch::Plus, Branch::Minus);
    EXPECT_NEAR(inner / outer, (std::sqrt(2.0) + 1) / (std::sqrt(2.0) - 1), 1e-12);
    EXPECT_NEAR(inner / outer, 5.83, 0.005);
    EXPECT_EQ(to_string(LineKind::VacuumPlus), "vacuum+");
    EXPECT_EQ(to_string(LineKind::Line4), "4");
}
