#include <gtest/gtest.h>

#include <random>

#include "cqad/algebra.hpp"
#include "cqad/error.hpp"
#include "cqad/steady_state.hpp"

using namespace cqad;

namespace {

Operator random_op(int dim, std::mt19937& rng)
{
    std::normal_distribution<double> nd;
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m(i, j) = Complex(nd(rng), nd(rng));
    return Operator(HilbertSpace{dim}, m);
}

// Plain triple loop, no Eigen products.
Matrix naive_product(const Matrix& a, const Matrix& b)
{
    Matrix c = Matrix::Zero(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            for (int k = 0; k < a.cols(); ++k)
                c(i, j) += a(i, k) * b(k, j);
    return c;
}

} // namespace

TEST(HilbertSpace, Dimensions)
{
    HilbertSpace s{5, 10};
    EXPECT_EQ(s.total_dim(), 50);
    EXPECT_EQ(s.rank(), 2);
    EXPECT_EQ((HilbertSpace{2} * HilbertSpace{3}), (HilbertSpace{2, 3}));
    EXPECT_THROW(HilbertSpace({1, 4}), InvalidDimension);
    EXPECT_THROW(HilbertSpace(std::vector<int>{}), InvalidDimension);
}

TEST(Annihilation, MatrixElements)
{
    const Operator a2 = annihilation(2);
    EXPECT_EQ(a2(0, 1), Complex(1.0));
    EXPECT_EQ(a2(1, 0), Complex(0.0));
    EXPECT_EQ(a2(0, 0), Complex(0.0));

    const Operator a3 = annihilation(3);
    EXPECT_DOUBLE_EQ(a3(0, 1).real(), 1.0);
    EXPECT_DOUBLE_EQ(a3(1, 2).real(), std::sqrt(2.0));
    EXPECT_EQ((a3.entries().array() != Complex(0.0)).count(), 2);

    EXPECT_THROW(annihilation(1), InvalidDimension);
}

TEST(Annihilation, NumberOperatorEigenvalue)
{
    const Operator a = annihilation(8);
    const Operator n = a.adjoint() * a;
    Vector five = Vector::Zero(8);
    five(5) = 1.0;
    // matrix-vector product done by hand
    Vector out = Vector::Zero(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            out(i) += n(i, j) * five(j);
    EXPECT_NEAR((out - 5.0 * five).norm(), 0.0, 1e-14);
}

TEST(Tensor, IdentityAndDisjointFactorsCommute)
{
    const Operator i6 = tensor(Operator::identity(HilbertSpace{2}), Operator::identity(HilbertSpace{3}));
    EXPECT_EQ(i6.space(), (HilbertSpace{2, 3}));
    EXPECT_TRUE(i6.entries().isApprox(Matrix::Identity(6, 6)));

    Matrix sz(2, 2);
    sz << 1, 0, 0, -1;
    const Operator a = annihilation(4);
    const Operator lhs = tensor(Operator(HilbertSpace{2}, sz), Operator::identity(HilbertSpace{4}));
    const Operator rhs = tensor(Operator::identity(HilbertSpace{2}), a.adjoint() * a);
    EXPECT_LT(lhs.commutator(rhs).entries().norm(), 1e-14);
}

TEST(Tensor, MixedProductMatchesBruteForce)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const Operator a = random_op(2, rng), c = random_op(2, rng);
        const Operator b = random_op(3, rng), d = random_op(3, rng);
        const Matrix lhs = naive_product(tensor(a, b).entries(), tensor(c, d).entries());
        const Matrix ac = naive_product(a.entries(), c.entries());
        const Matrix bd = naive_product(b.entries(), d.entries());
        Matrix rhs(6, 6);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l)
                        rhs(3 * i + k, 3 * j + l) = ac(i, j) * bd(k, l);
        EXPECT_LT((lhs - rhs).norm(), 1e-12);
    }
}

TEST(Operator, SpaceMismatchThrows)
{
    const Operator a = annihilation(3);
    const Operator b = annihilation(4);
    EXPECT_THROW(a + b, InvalidDimension);
    EXPECT_THROW(a * b, InvalidDimension);
    EXPECT_THROW(embed(a, HilbertSpace{2, 4}, 1), InvalidDimension);
}

TEST(Operator, EmbedPlacesFactor)
{
    const HilbertSpace s{3, 4};
    const Operator a = annihilation(4);
    const Operator e = embed(a, s, 1);
    EXPECT_TRUE(e.entries().isApprox(tensor(Operator::identity(HilbertSpace{3}), a).entries()));
    EXPECT_TRUE(annihilation(4).adjoint().adjoint().entries() == a.entries());
    EXPECT_TRUE((a + a.adjoint()).is_hermitian(1e-14));
    EXPECT_FALSE(a.is_hermitian(1e-14));
}

TEST(Expectation, TraceIdentities)
{
    Matrix rho = Matrix::Zero(6, 6);
    rho(0, 0) = 0.5;
    rho(3, 3) = 0.25;
    rho(5, 5) = 0.25;
    rho(0, 3) = rho(3, 0) = 0.1;
    const DensityMatrix dm(HilbertSpace{6}, rho);
    EXPECT_NEAR(std::abs(expectation(Operator::identity(HilbertSpace{6}), dm) - 1.0), 0.0, 1e-15);

    const Operator a = annihilation(6);
    Matrix fock = Matrix::Zero(6, 6);
    fock(4, 4) = 1.0;
    EXPECT_NEAR(expectation(a.adjoint() * a, DensityMatrix(HilbertSpace{6}, fock)).real(), 4.0, 1e-14);
}

TEST(Expectation, MatchesDoubleLoopTrace)
{
    // coherent-like pure state, truncated and renormalized
    const int dim = 7;
    const Complex alpha(0.6, -0.3);
    Vector psi(dim);
    double fact = 1.0;
    for (int n = 0; n < dim; ++n) {
        if (n > 0)
            fact *= n;
        psi(n) = std::pow(alpha, n) / std::sqrt(fact);
    }
    psi.normalize();
    const Matrix rho = psi * psi.adjoint();
    const Operator a = annihilation(dim);

    Complex oracle = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k)
            oracle += a(i, k) * rho(k, i);
    EXPECT_NEAR(std::abs(expectation(a, DensityMatrix(HilbertSpace{dim}, rho)) - oracle), 0.0, 1e-14);
    EXPECT_THROW(expectation(annihilation(3), DensityMatrix(HilbertSpace{dim}, rho)), InvalidDimension);
}
