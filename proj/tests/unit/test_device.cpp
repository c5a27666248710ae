#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numbers>

#include "cqad/device.hpp"
#include "cqad/error.hpp"

using namespace cqad;

TEST(Josephson, FluxDependence)
{
    DeviceParams p;
    EXPECT_DOUBLE_EQ(josephson_energy(p, 0.0), 22880.0);
    EXPECT_NEAR(josephson_energy(p, 0.5), 0.0, 1e-9);
    EXPECT_NEAR(josephson_energy(p, 1.0 / 3.0), 11440.0, 1e-9);
    EXPECT_DOUBLE_EQ(josephson_energy(p, 0.2), josephson_energy(p, -0.2));
}

TEST(QubitFrequency, SweetSpotAndDegenerate)
{
    DeviceParams p;
    EXPECT_NEAR(qubit_frequency(p, 0.0), std::sqrt(8.0 * 160.0 * 22880.0) - 160.0, 1e-9);
    EXPECT_NEAR(qubit_frequency(p, 0.0), 5251.7, 0.1);
    // reported sweet-spot value 5260 MHz
    EXPECT_LT(std::abs(qubit_frequency(p, 0.0) - 5260.0) / 5260.0, 0.002);
    EXPECT_THROW(qubit_frequency(p, 0.5), DegenerateQubit);
}

TEST(QubitFrequency, ResonanceByBisection)
{
    DeviceParams p;
    double lo = 0.0, hi = 0.499;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (qubit_frequency(p, mid) > p.omega_r ? lo : hi) = mid;
    }
    EXPECT_NEAR(qubit_frequency(p, lo), p.omega_r, 1e-6);
}

TEST(QubitFrequency, SqrtScaling)
{
    DeviceParams p;
    p.E_J_max = 1e8;
    const double w1 = qubit_frequency(p, 0.0) + p.E_C;
    p.E_J_max = 4e8;
    const double w4 = qubit_frequency(p, 0.0) + p.E_C;
    EXPECT_NEAR(w4 / w1, 2.0, 1e-12);
}

TEST(BoseEinstein, Values)
{
    EXPECT_EQ(bose_einstein(3162.0, 0.0), 0.0);
    EXPECT_EQ(bose_einstein(1.0, 0.0), 0.0);
    const double x = 47.9924 * 3.162 / 16.5;
    EXPECT_NEAR(bose_einstein(3162.0, 16.5), 1.0 / std::expm1(x), 1e-18);
    EXPECT_NEAR(bose_einstein(3162.0, 16.5), 1.0e-4, 0.2e-4);
}

TEST(BoseEinstein, GeometricSeriesOracle)
{
    const double x = std::exp(-47.9924 * 3.162 / 349.0);
    double mean = 0.0;
    for (int n = 1; n < 5000; ++n)
        mean += n * std::pow(x, n) * (1.0 - x);
    EXPECT_NEAR(bose_einstein(3162.0, 349.0), mean, 1e-10);
    EXPECT_NEAR(bose_einstein(3162.0, 349.0), 1.84, 0.01);
}

TEST(Crossover, Temperatures)
{
    EXPECT_NEAR(crossover_temperature(3162.0), 151.8, 0.05);
    EXPECT_NEAR(crossover_temperature(1000.0), 47.99, 0.005);
    EXPECT_NEAR(crossover_temperature(5260.0), 252.4, 0.05);
    EXPECT_LT(std::abs(crossover_temperature(3162.0) - 149.0) / 149.0, 0.03);
}

TEST(StarkLamb, Shifts)
{
    const double lamb = 18.5 * 18.5 / 1282.0;
    EXPECT_NEAR(stark_lamb_shift(1.0, 1282.0, 18.5) - lamb, 0.534, 0.0005);
    EXPECT_DOUBLE_EQ(stark_lamb_shift(0.0, 1282.0, 18.5), lamb);
    EXPECT_NEAR(stark_lamb_shift(1000.0, 1282.0, 18.5), 1000.0 * 2.0 * lamb + lamb, 1e-9);
    EXPECT_THROW(stark_lamb_shift(1.0, 0.0, 18.5), DispersiveInvalid);
    EXPECT_TRUE(dispersive_warning(100.0, 18.5));
    EXPECT_FALSE(dispersive_warning(1282.0, 18.5));
}

TEST(Params, Validation)
{
    DeviceParams p;
    EXPECT_NO_THROW(p.validate());
    p.kappa = -1.0;
    EXPECT_THROW(p.validate(), InvalidArgument);
    p = DeviceParams{};
    p.transmon_levels = 1;
    EXPECT_THROW(p.validate(), InvalidDimension);
    p = DeviceParams{};
    p.g = 0.0;
    EXPECT_NO_THROW(p.check_buildable());
}

TEST(Hamiltonian, TwoLevelRabiDoublet)
{
    DeviceParams p;
    p.transmon_levels = 2;
    p.fock_cutoff = 4;
    const Operator h = build_hamiltonian(p, p.omega_r, FrameSpec::lab());
    ASSERT_TRUE(h.is_hermitian(1e-12));
    // one-excitation block {|g,1>, |e,0>}
    const int g1 = 0 * 4 + 1, e0 = 1 * 4 + 0;
    Eigen::Matrix2cd block;
    block << h(g1, g1), h(g1, e0), h(e0, g1), h(e0, e0);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(block);
    EXPECT_NEAR(es.eigenvalues()(0), p.omega_r - p.g, 1e-9);
    EXPECT_NEAR(es.eigenvalues()(1), p.omega_r + p.g, 1e-9);
}

TEST(Hamiltonian, DecoupledIsDiagonal)
{
    DeviceParams p;
    p.g = 0.0;
    p.transmon_levels = 3;
    p.fock_cutoff = 4;
    const double wa = 3000.0;
    const Matrix h = build_hamiltonian(p, wa, FrameSpec::lab()).entries();
    EXPECT_LT((h - Matrix(h.diagonal().asDiagonal())).norm(), 1e-14);
    for (int l = 0; l < 3; ++l)
        for (int n = 0; n < 4; ++n)
            EXPECT_NEAR(h(l * 4 + n, l * 4 + n).real(),
                        n * p.omega_r + l * wa - 0.5 * p.E_C * l * (l - 1), 1e-9);
}

TEST(Hamiltonian, AnharmonicLadder)
{
    DeviceParams p;
    p.fock_cutoff = 3;
    const double wa = 4000.0;
    const Operator h = build_hamiltonian(p, wa, FrameSpec::lab());
    auto e = [&](int l) { return h(l * 3, l * 3).real(); };
    EXPECT_NEAR(e(1) - e(0), wa, 1e-9);
    EXPECT_NEAR(e(2) - e(1), wa - 160.0, 1e-9);
}

TEST(Hamiltonian, RotatingFrameSubtractsExcitations)
{
    DeviceParams p;
    p.fock_cutoff = 4;
    const double wp = 3150.0;
    const Operator lab = build_hamiltonian(p, p.omega_r, FrameSpec::lab());
    const Operator rot = build_hamiltonian(p, p.omega_r, FrameSpec::rotating(wp));
    const Operator diff = lab - rot - excitation_number(p) * Complex(wp);
    EXPECT_LT(diff.entries().norm(), 1e-9);
    // RWA: excitation number is conserved
    EXPECT_LT(lab.commutator(excitation_number(p)).entries().norm(), 1e-9);
}

TEST(Probe, Elements)
{
    DeviceParams p;
    p.transmon_levels = 2;
    p.fock_cutoff = 3;
    const Operator hp = build_probe(p);
    EXPECT_TRUE(hp.is_hermitian(0.0));
    EXPECT_NEAR(hp(0, 1).real(), p.epsilon / 2.0, 1e-15);
    EXPECT_NEAR(hp(1, 2).real(), p.epsilon / 2.0 * std::sqrt(2.0), 1e-15);
    p.epsilon = 0.0;
    EXPECT_EQ(build_probe(p).entries().norm(), 0.0);
}
