#pragma once

#include <Eigen/SparseCore>

#include "cqad/algebra.hpp"
#include "cqad/device.hpp"

namespace cqad {

using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::ColMajor, int>;

// Vectorization is column stacking throughout: vec(rho)[i + j * D] = rho(i, j),
// so vec(A rho B) = (B^T (x) A) vec(rho).
inline int vec_index(int row, int col, int dim) { return row + col * dim; }
Vector vectorize(const Matrix& rho);
Matrix unvectorize(const Vector& v, int dim);

// Kronecker product of sparse matrices.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

// Dense -> sparse, dropping entries with magnitude <= 1e-15.
SparseMatrix to_sparse(const Matrix& m);

// -i [H, .]
SparseMatrix commutator_superoperator(const Operator& hamiltonian);

// (rate / 2) (2 o . o^dag - o^dag o . - . o^dag o)
SparseMatrix dissipator(const Operator& op, double rate);

// sum_l sqrt(l) |l-1><l| (x) 1_fock
Operator qubit_collapse(const DeviceParams& params);

struct Liouvillian
{
    HilbertSpace space;
    SparseMatrix matrix;
    double probe_frequency = 0.0;
    // `matrix` without the probe-drive commutator. It is block diagonal in the
    // excitation difference of bra and ket, which keeps its LU factors sparse.
    // Optional: empty when the generator was assembled by other means.
    SparseMatrix undriven;

    int dim() const noexcept { return space.total_dim(); }
    Matrix apply(const Matrix& rho) const;
};

// Thermal master-equation generator in the frame rotating at the probe
// frequency. Everything except the probe-frequency term is built once, so a
// whole spectrum reuses one sparsity pattern.
class LiouvillianFamily
{
public:
    LiouvillianFamily(const DeviceParams& params, double qubit_freq);

    Liouvillian at(double probe_frequency) const;

    const HilbertSpace& space() const noexcept { return space_; }
    const DeviceParams& params() const noexcept { return params_; }
    double qubit_freq() const noexcept { return qubit_freq_; }
    double n_th_resonator() const noexcept { return n_th_; }
    double n_th_qubit() const noexcept { return n_th_qubit_; }

    // Undriven, probe-frequency-independent part, with every diagonal entry
    // structurally present.
    const SparseMatrix& static_part() const noexcept { return static_; }
    // -i [H_p, .]
    const SparseMatrix& drive_part() const noexcept { return drive_; }
    // Diagonal coefficient vector multiplying the probe frequency.
    const Vector& probe_diagonal() const noexcept { return probe_diag_; }

private:
    DeviceParams params_;
    double qubit_freq_;
    HilbertSpace space_;
    double n_th_ = 0.0;
    double n_th_qubit_ = 0.0;
    SparseMatrix static_;
    SparseMatrix drive_;
    Vector probe_diag_;
};

Liouvillian build_liouvillian(const DeviceParams& params, double qubit_freq, double probe_frequency);

} // namespace cqad
