#include "radpair/liouville.hpp"

#include <cmath>
#include <stdexcept>

namespace radpair {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vector vectorize(const Matrix& rho) {
    if (rho.rows() != rho.cols())
        throw std::invalid_argument("vectorize: matrix must be square");
    const Eigen::Index n = rho.rows();
    Vector v(n * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            v(liouville_index(i, j, n)) = rho(i, j);
    return v;
}

Matrix devectorize(const Vector& v) {
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
    if (n * n != v.size())
        throw std::invalid_argument("devectorize: length is not a perfect square");
    Matrix rho(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            rho(i, j) = v(liouville_index(i, j, n));
    return rho;
}

Matrix anticommutator_superop(const Matrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("anticommutator_superop: matrix must be square");
    const Matrix e = Matrix::Identity(a.rows(), a.cols());
    return kron(a, e) + kron(e, a.transpose());
}

Matrix commutator_superop(const Matrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("commutator_superop: matrix must be square");
    const Matrix e = Matrix::Identity(a.rows(), a.cols());
    return kron(a, e) - kron(e, a.transpose());
}

double effective_purity(const Matrix& rho) {
    const Complex tr = rho.trace();
    if (std::abs(tr) == 0.0)
        throw std::domain_error("effective_purity: zero-trace density matrix (fully reacted)");
    const Complex tr2 = (rho * rho).trace();
    return (tr2 / (tr * tr)).real();
}

ProjectorSet ProjectorSet::spin_st() {
    ProjectorSet p;
    p.singlet << 1, 0, 0, 0;
    p.triplet << 0, 0, 0, 1;
    return p;
}

bool ProjectorSet::complete(double tol) const {
    const SpinMatrix e = SpinMatrix::Identity();
    if (((singlet + triplet) - e).cwiseAbs().maxCoeff() > tol) return false;
    if ((singlet * triplet).cwiseAbs().maxCoeff() > tol) return false;
    if ((singlet * singlet - singlet).cwiseAbs().maxCoeff() > tol) return false;
    if ((triplet * triplet - triplet).cwiseAbs().maxCoeff() > tol) return false;
    return true;
}

SpinMatrix projective_collapse(const SpinMatrix& rho, const ProjectorSet& projectors) {
    if (!projectors.complete())
        throw std::invalid_argument("projective_collapse: projector set is not complete and orthogonal");
    return projectors.singlet * rho * projectors.singlet + projectors.triplet * rho * projectors.triplet;
}

SpinMatrix trace_out_sites(const std::vector<SpinMatrix>& site_blocks) {
    if (site_blocks.empty())
        throw std::invalid_argument("trace_out_sites: empty site list");
    SpinMatrix sum = SpinMatrix::Zero();
    for (const auto& block : site_blocks) sum += block;
    return sum;
}

Vector stack_sites(const std::vector<SpinMatrix>& site_blocks) {
    if (site_blocks.empty())
        throw std::invalid_argument("stack_sites: empty site list");
    Vector v(4 * static_cast<Eigen::Index>(site_blocks.size()));
    for (std::size_t s = 0; s < site_blocks.size(); ++s)
        v.segment(4 * static_cast<Eigen::Index>(s), 4) = vectorize(site_blocks[s]);
    return v;
}

std::vector<SpinMatrix> unstack_sites(const Vector& v) {
    if (v.size() == 0 || v.size() % 4 != 0)
        throw std::invalid_argument("unstack_sites: length must be a positive multiple of 4");
    std::vector<SpinMatrix> blocks(static_cast<std::size_t>(v.size() / 4));
    for (std::size_t s = 0; s < blocks.size(); ++s)
        blocks[s] = devectorize(v.segment(4 * static_cast<Eigen::Index>(s), 4));
    return blocks;
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_positive_semidefinite(const Matrix& m, double tol) {
    if (!is_hermitian(m, tol > algebra_tol ? tol : algebra_tol)) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    return solver.eigenvalues().minCoeff() >= -tol;
}

PureSpinState::PureSpinState(Complex cs, Complex ct) : c_singlet(cs), c_triplet(ct) {
    const double norm2 = std::norm(cs) + std::norm(ct);
    if (std::abs(norm2 - 1.0) > equality_tol)
        throw std::invalid_argument("PureSpinState: |c_S|^2 + |c_T|^2 must equal 1");
}

SpinMatrix PureSpinState::density() const {
    SpinMatrix rho;
    rho(0, 0) = c_singlet * std::conj(c_singlet);
    rho(0, 1) = c_singlet * std::conj(c_triplet);
    rho(1, 0) = c_triplet * std::conj(c_singlet);
    rho(1, 1) = c_triplet * std::conj(c_triplet);
    return rho;
}

} // namespace radpair
