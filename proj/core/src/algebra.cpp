#include "cqad/algebra.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "cqad/error.hpp"
#include "cqad/steady_state.hpp"

namespace cqad {

HilbertSpace::HilbertSpace(std::vector<int> factor_dims)
    : dims_(std::move(factor_dims))
{
    if (dims_.empty())
        throw InvalidDimension("HilbertSpace needs at least one factor");
    total_ = 1;
    for (int d : dims_) {
        if (d < 2)
            throw InvalidDimension("factor dimension must be >= 2, got " + std::to_string(d));
        total_ *= d;
    }
}

HilbertSpace::HilbertSpace(std::initializer_list<int> factor_dims)
    : HilbertSpace(std::vector<int>(factor_dims))
{}

HilbertSpace HilbertSpace::operator*(const HilbertSpace& other) const
{
    std::vector<int> dims = dims_;
    dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
    return HilbertSpace(std::move(dims));
}

Operator::Operator(HilbertSpace space, Matrix entries)
    : space_(std::move(space)), entries_(std::move(entries))
{
    const auto n = space_.total_dim();
    if (entries_.rows() != n || entries_.cols() != n)
        throw InvalidDimension("operator matrix is " + std::to_string(entries_.rows()) + "x" +
                               std::to_string(entries_.cols()) + ", space has dimension " +
                               std::to_string(n));
}

Operator Operator::zero(const HilbertSpace& space)
{
    return {space, Matrix::Zero(space.total_dim(), space.total_dim())};
}

Operator Operator::identity(const HilbertSpace& space)
{
    return {space, Matrix::Identity(space.total_dim(), space.total_dim())};
}

Operator Operator::adjoint() const { return {space_, entries_.adjoint()}; }

void Operator::require_same_space(const Operator& rhs) const
{
    if (!(space_ == rhs.space_))
        throw InvalidDimension("operator spaces differ");
}

Operator Operator::operator+(const Operator& rhs) const
{
    require_same_space(rhs);
    return {space_, entries_ + rhs.entries_};
}

Operator Operator::operator-(const Operator& rhs) const
{
    require_same_space(rhs);
    return {space_, entries_ - rhs.entries_};
}

Operator Operator::operator*(const Operator& rhs) const
{
    require_same_space(rhs);
    return {space_, entries_ * rhs.entries_};
}

Operator Operator::operator*(Complex scale) const { return {space_, entries_ * scale}; }

Operator Operator::commutator(const Operator& rhs) const
{
    require_same_space(rhs);
    return {space_, entries_ * rhs.entries_ - rhs.entries_ * entries_};
}

bool Operator::is_hermitian(double tol) const
{
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Operator annihilation(int fock_dim)
{
    if (fock_dim < 2)
        throw InvalidDimension("fock_dim must be >= 2, got " + std::to_string(fock_dim));
    Matrix m = Matrix::Zero(fock_dim, fock_dim);
    for (int n = 1; n < fock_dim; ++n)
        m(n - 1, n) = std::sqrt(static_cast<double>(n));
    return {HilbertSpace{fock_dim}, std::move(m)};
}

Operator projector(int dim, int index)
{
    if (index < 0 || index >= dim)
        throw InvalidArgument("projector index out of range");
    Matrix m = Matrix::Zero(dim, dim);
    m(index, index) = 1.0;
    return {HilbertSpace{dim}, std::move(m)};
}

Operator tensor(const Operator& a, const Operator& b)
{
    const auto& A = a.entries();
    const auto& B = b.entries();
    const Eigen::Index nb = B.rows();
    Matrix out(A.rows() * nb, A.cols() * nb);
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            out.block(i * nb, j * nb, nb, nb) = A(i, j) * B;
    return {a.space() * b.space(), std::move(out)};
}

Operator embed(const Operator& local, const HilbertSpace& space, int slot)
{
    const auto& dims = space.factor_dims();
    if (slot < 0 || slot >= space.rank())
        throw InvalidDimension("embed slot out of range");
    if (local.dim() != dims[slot])
        throw InvalidDimension("embedded operator does not match factor dimension");

    Operator out;
    bool first = true;
    for (int k = 0; k < space.rank(); ++k) {
        Operator factor = (k == slot) ? local : Operator::identity(HilbertSpace{dims[k]});
        out = first ? factor : tensor(out, factor);
        first = false;
    }
    return out;
}

Complex expectation(const Operator& op, const DensityMatrix& rho)
{
    if (!(op.space() == rho.space()))
        throw InvalidDimension("expectation: operator and state live on different spaces");
    // trace(A B) = sum_ij A_ij B_ji
    return (op.entries().transpose().cwiseProduct(rho.entries())).sum();
}

} // namespace cqad
