#include "cqad/lindblad.hpp"

#include <cmath>
#include <vector>

#include "cqad/error.hpp"

namespace cqad {

namespace {

constexpr double kDropTolerance = 1e-15;

using Triplet = Eigen::Triplet<Complex, int>;

SparseMatrix sparse_identity(int n)
{
    SparseMatrix id(n, n);
    id.setIdentity();
    return id;
}

} // namespace

Vector vectorize(const Matrix& rho)
{
    return Eigen::Map<const Vector>(rho.data(), rho.size());
}

Matrix unvectorize(const Vector& v, int dim)
{
    if (v.size() != static_cast<Eigen::Index>(dim) * dim)
        throw InvalidDimension("unvectorize: length is not dim^2");
    return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b)
{
    const int rb = static_cast<int>(b.rows());
    const int cb = static_cast<int>(b.cols());
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(a.nonZeros()) * b.nonZeros());
    for (int ka = 0; ka < a.outerSize(); ++ka)
        for (SparseMatrix::InnerIterator ia(a, ka); ia; ++ia)
            for (int kb = 0; kb < b.outerSize(); ++kb)
                for (SparseMatrix::InnerIterator ib(b, kb); ib; ++ib)
                    triplets.emplace_back(ia.row() * rb + ib.row(), ia.col() * cb + ib.col(),
                                          ia.value() * ib.value());
    SparseMatrix out(a.rows() * rb, a.cols() * cb);
    out.setFromTriplets(triplets.begin(), triplets.end());
    return out;
}

SparseMatrix to_sparse(const Matrix& m)
{
    std::vector<Triplet> triplets;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (std::abs(m(i, j)) > kDropTolerance)
                triplets.emplace_back(static_cast<int>(i), static_cast<int>(j), m(i, j));
    SparseMatrix out(m.rows(), m.cols());
    out.setFromTriplets(triplets.begin(), triplets.end());
    return out;
}

SparseMatrix commutator_superoperator(const Operator& hamiltonian)
{
    const SparseMatrix h = to_sparse(hamiltonian.entries());
    const SparseMatrix ht = to_sparse(hamiltonian.entries().transpose());
    const SparseMatrix id = sparse_identity(hamiltonian.dim());
    SparseMatrix out = Complex(0.0, -1.0) * (kron(id, h) - kron(ht, id));
    out.prune(kDropTolerance, 1.0);
    return out;
}

SparseMatrix dissipator(const Operator& op, double rate)
{
    if (rate < 0.0)
        throw InvalidArgument("dissipator rate must be >= 0");
    const int d = op.dim();
    if (rate == 0.0)
        return SparseMatrix(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);

    const Matrix& o = op.entries();
    const Matrix odo = o.adjoint() * o;
    const SparseMatrix id = sparse_identity(d);
    SparseMatrix out = 2.0 * kron(to_sparse(o.conjugate()), to_sparse(o)) -
                       kron(id, to_sparse(odo)) - kron(to_sparse(odo.transpose()), id);
    out *= Complex(0.5 * rate);
    out.prune(kDropTolerance, 1.0);
    return out;
}

Operator qubit_collapse(const DeviceParams& params)
{
    const int levels = params.transmon_levels;
    if (levels < 2)
        throw InvalidDimension("transmon_levels must be >= 2");
    // same matrix as a truncated bosonic lowering operator on the transmon
    return embed(annihilation(levels), params.space(), 0);
}

Matrix Liouvillian::apply(const Matrix& rho) const
{
    return unvectorize(matrix * vectorize(rho), dim());
}

LiouvillianFamily::LiouvillianFamily(const DeviceParams& params, double qubit_freq)
    : params_(params), qubit_freq_(qubit_freq), space_(params.space())
{
    params_.check_buildable();
    if (!(qubit_freq > 0.0))
        throw InvalidArgument("qubit frequency must be positive");

    n_th_ = bose_einstein(params_.omega_r, params_.temperature);
    n_th_qubit_ = bose_einstein(qubit_freq_, params_.temperature);

    const Operator h = build_hamiltonian(params_, qubit_freq_, FrameSpec::lab());
    const Operator a = resonator_lowering(params_);
    const Operator s = qubit_collapse(params_);

    SparseMatrix l = commutator_superoperator(h);
    l += dissipator(a, params_.kappa * (n_th_ + 1.0));
    l += dissipator(a.adjoint(), params_.kappa * n_th_);
    l += dissipator(s, params_.gamma_q * (n_th_qubit_ + 1.0));
    l += dissipator(s.adjoint(), params_.gamma_q * n_th_qubit_);

    // Rotating frame: H -> H - w_p N with N diagonal, so -i[-w_p N, .] is
    // diagonal with entries i w_p (N_i - N_j) at vec index (i, j).
    const int d = space_.total_dim();
    const Operator n_exc = excitation_number(params_);
    probe_diag_.resize(static_cast<Eigen::Index>(d) * d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i)
            probe_diag_(vec_index(i, j, d)) = Complex(0.0, 1.0) * (n_exc(i, i) - n_exc(j, j));

    SparseMatrix diag_pattern(l.rows(), l.cols());
    diag_pattern.setIdentity();
    static_ = l + Complex(0.0) * diag_pattern;
    static_.makeCompressed();

    drive_ = commutator_superoperator(build_probe(params_));
    drive_.makeCompressed();
}

Liouvillian LiouvillianFamily::at(double probe_frequency) const
{
    if (!(probe_frequency > 0.0))
        throw InvalidArgument("probe frequency must be positive");
    SparseMatrix undriven = static_;
    for (Eigen::Index k = 0; k < undriven.outerSize(); ++k)
        undriven.coeffRef(k, k) += probe_frequency * probe_diag_(k);
    SparseMatrix full = undriven + drive_;
    return Liouvillian{space_, std::move(full), probe_frequency, std::move(undriven)};
}

Liouvillian build_liouvillian(const DeviceParams& params, double qubit_freq, double probe_frequency)
{
    return LiouvillianFamily(params, qubit_freq).at(probe_frequency);
}

} // namespace cqad
