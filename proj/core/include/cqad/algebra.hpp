#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

namespace cqad {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Ordered tensor-product space. Basis index of a product state is row-major
// over the factors: for (transmon, fock) it is l * fock_dim + n.
class HilbertSpace
{
public:
    HilbertSpace() = default;
    explicit HilbertSpace(std::vector<int> factor_dims);
    HilbertSpace(std::initializer_list<int> factor_dims);

    const std::vector<int>& factor_dims() const noexcept { return dims_; }
    int total_dim() const noexcept { return total_; }
    int rank() const noexcept { return static_cast<int>(dims_.size()); }

    HilbertSpace operator*(const HilbertSpace& other) const;
    bool operator==(const HilbertSpace& other) const = default;

private:
    std::vector<int> dims_;
    int total_ = 0;
};

class DensityMatrix;

// Dense square matrix on a HilbertSpace.
class Operator
{
public:
    Operator() = default;
    Operator(HilbertSpace space, Matrix entries);

    static Operator zero(const HilbertSpace& space);
    static Operator identity(const HilbertSpace& space);

    const HilbertSpace& space() const noexcept { return space_; }
    const Matrix& entries() const noexcept { return entries_; }
    int dim() const noexcept { return space_.total_dim(); }

    Complex operator()(int row, int col) const { return entries_(row, col); }

    Operator adjoint() const;

    Operator operator+(const Operator& rhs) const;
    Operator operator-(const Operator& rhs) const;
    Operator operator*(const Operator& rhs) const;
    Operator operator*(Complex scale) const;
    friend Operator operator*(Complex scale, const Operator& op) { return op * scale; }

    Operator commutator(const Operator& rhs) const;

    bool is_hermitian(double tol) const;

private:
    void require_same_space(const Operator& rhs) const;

    HilbertSpace space_;
    Matrix entries_;
};

// Truncated bosonic lowering operator: <n-1|a|n> = sqrt(n).
Operator annihilation(int fock_dim);

// |index><index| on a single-factor space.
Operator projector(int dim, int index);

// Kronecker product; factor lists are concatenated.
Operator tensor(const Operator& a, const Operator& b);

// Embed a single-factor operator into a product space at factor position `slot`.
Operator embed(const Operator& local, const HilbertSpace& space, int slot);

// trace(op * rho)
Complex expectation(const Operator& op, const DensityMatrix& rho);

} // namespace cqad
