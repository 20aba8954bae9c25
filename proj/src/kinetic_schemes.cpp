#include "radpair/kinetic_schemes.hpp"

#include <cmath>
#include <stdexcept>

namespace radpair {

namespace {

void require_nonnegative(std::initializer_list<double> rates, const char* where) {
    for (double k : rates)
        if (!(k >= 0.0)) throw std::invalid_argument(std::string(where) + ": rates must be non-negative");
}

// Diagonal Haberkorn tunnelling block diag(kS, (kS+kT)/2, (kS+kT)/2, kT),
// written out literally; the dedicated builders mirror the displayed block
// matrices entry by entry.
Matrix tunnelling_block(double k_s, double k_t) {
    Matrix k = Matrix::Zero(4, 4);
    k(0, 0) = k_s;
    k(1, 1) = 0.5 * k_s + 0.5 * k_t;
    k(2, 2) = 0.5 * k_s + 0.5 * k_t;
    k(3, 3) = k_t;
    return k;
}

Matrix scaled_identity(double k) { return k * Matrix::Identity(4, 4); }

constexpr double element_epsilon[4] = {1.0, 0.5, 0.5, 0.0};

} // namespace

void KineticScheme::validate() const {
    const int n = num_sites();
    if (n < 1) throw std::invalid_argument("KineticScheme: at least one site required");
    for (const auto& site : sites) site.rates.validate();
    if (exchange.rows() != n || exchange.cols() != n)
        throw std::invalid_argument("KineticScheme: exchange table must be N x N");
    for (int i = 0; i < n; ++i) {
        if (exchange(i, i) != 0.0)
            throw std::invalid_argument("KineticScheme: exchange diagonal must be zero");
        for (int j = 0; j < n; ++j)
            if (!(exchange(i, j) >= 0.0))
                throw std::invalid_argument("KineticScheme: exchange rates must be non-negative");
    }
    if (initial_distribution.size() != n)
        throw std::invalid_argument("KineticScheme: initial distribution must have one entry per site");
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        if (!(initial_distribution(i) >= 0.0))
            throw std::invalid_argument("KineticScheme: initial distribution must be non-negative");
        sum += initial_distribution(i);
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("KineticScheme: initial distribution must sum to 1");
}

KineticScheme KineticScheme::single_site(ChannelRates rates) {
    KineticScheme s;
    s.sites = {{"R1", rates}};
    s.exchange = RealMatrix::Zero(1, 1);
    s.initial_distribution = RealVector::Ones(1);
    s.validate();
    return s;
}

KineticScheme KineticScheme::two_site(double k_s1, double k_s2, double k12, double k21) {
    KineticScheme s;
    s.sites = {{"R1", {k_s1, 0.0}}, {"R2", {k_s2, 0.0}}};
    s.exchange = RealMatrix::Zero(2, 2);
    s.exchange(0, 1) = k12;
    s.exchange(1, 0) = k21;
    s.initial_distribution = RealVector::Zero(2);
    s.initial_distribution(0) = 1.0;
    s.validate();
    return s;
}

KineticScheme KineticScheme::common_intermediate(double k12, double k21, double k_s2, double k_t2) {
    KineticScheme s;
    s.sites = {{"R1", {0.0, 0.0}}, {"R2", {k_s2, k_t2}}};
    s.exchange = RealMatrix::Zero(2, 2);
    s.exchange(0, 1) = k12;
    s.exchange(1, 0) = k21;
    s.initial_distribution = RealVector::Zero(2);
    s.initial_distribution(0) = 1.0;
    s.validate();
    return s;
}

KineticScheme KineticScheme::three_site(double k12, double k21, double k13, double k31,
                                        double k_s2, double k_t3) {
    KineticScheme s;
    s.sites = {{"R1", {0.0, 0.0}}, {"R2", {k_s2, 0.0}}, {"R3", {0.0, k_t3}}};
    s.exchange = RealMatrix::Zero(3, 3);
    s.exchange(0, 1) = k12;
    s.exchange(0, 2) = k13;
    s.exchange(1, 0) = k21;
    s.exchange(2, 0) = k31;
    s.initial_distribution = RealVector::Zero(3);
    s.initial_distribution(0) = 1.0;
    s.validate();
    return s;
}

Matrix build_two_site(double k_s1, double k_s2, double k12, double k21) {
    require_nonnegative({k_s1, k_s2, k12, k21}, "build_two_site");
    Matrix k = Matrix::Zero(8, 8);
    k.block(0, 0, 4, 4) = tunnelling_block(k_s1, 0.0) + scaled_identity(k12);
    k.block(0, 4, 4, 4) = -scaled_identity(k21);
    k.block(4, 0, 4, 4) = -scaled_identity(k12);
    k.block(4, 4, 4, 4) = tunnelling_block(k_s2, 0.0) + scaled_identity(k21);
    return k;
}

Matrix build_common_intermediate(double k12, double k21, double k_s2, double k_t2) {
    require_nonnegative({k12, k21, k_s2, k_t2}, "build_common_intermediate");
    Matrix k = Matrix::Zero(8, 8);
    k.block(0, 0, 4, 4) = scaled_identity(k12);
    k.block(0, 4, 4, 4) = -scaled_identity(k21);
    k.block(4, 0, 4, 4) = -scaled_identity(k12);
    k.block(4, 4, 4, 4) = tunnelling_block(k_s2, k_t2) + scaled_identity(k21);
    return k;
}

Matrix build_three_site(double k12, double k21, double k13, double k31,
                        double k_s2, double k_t3) {
    require_nonnegative({k12, k21, k13, k31, k_s2, k_t3}, "build_three_site");
    Matrix k = Matrix::Zero(12, 12);
    k.block(0, 0, 4, 4) = scaled_identity(k12) + scaled_identity(k13);
    k.block(0, 4, 4, 4) = -scaled_identity(k21);
    k.block(0, 8, 4, 4) = -scaled_identity(k31);
    k.block(4, 0, 4, 4) = -scaled_identity(k12);
    k.block(4, 4, 4, 4) = tunnelling_block(k_s2, 0.0) + scaled_identity(k21);
    k.block(8, 0, 4, 4) = -scaled_identity(k13);
    k.block(8, 8, 4, 4) = tunnelling_block(0.0, k_t3) + scaled_identity(k31);
    return k;
}

Matrix build_generic(const KineticScheme& scheme) {
    scheme.validate();
    const int n = scheme.num_sites();
    Matrix k = Matrix::Zero(4 * n, 4 * n);
    for (int i = 0; i < n; ++i) {
        double outflow = 0.0;
        for (int j = 0; j < n; ++j) outflow += scheme.exchange(i, j);
        k.block(4 * i, 4 * i, 4, 4) =
            haberkorn_superop(scheme.sites[static_cast<std::size_t>(i)].rates) +
            scaled_identity(outflow);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            k.block(4 * i, 4 * j, 4, 4) = -scaled_identity(scheme.exchange(j, i));
        }
    }
    return k;
}

std::vector<EpsilonBlock> block_decompose(const Matrix& op) {
    if (op.rows() != op.cols() || op.rows() < 4 || op.rows() % 4 != 0)
        throw std::invalid_argument("block_decompose: expected a 4N x 4N operator");
    const Eigen::Index n_sites = op.rows() / 4;

    const double scale = op.cwiseAbs().maxCoeff();
    const double tol = 1e-12 * (scale > 1.0 ? scale : 1.0);

    // Site-major index 4s + e; entries coupling different Liouville
    // elements (or carrying imaginary parts) mean this is not a kinetic
    // scheme operator.
    for (Eigen::Index row = 0; row < op.rows(); ++row) {
        for (Eigen::Index col = 0; col < op.cols(); ++col) {
            const Complex z = op(row, col);
            if (std::abs(z.imag()) > tol)
                throw std::invalid_argument("block_decompose: operator has imaginary entries");
            if (row % 4 != col % 4 && std::abs(z) > tol)
                throw std::invalid_argument(
                    "block_decompose: operator couples different Liouville elements");
        }
    }

    std::vector<EpsilonBlock> blocks(4);
    for (int e = 0; e < 4; ++e) {
        blocks[static_cast<std::size_t>(e)].element = static_cast<LiouvilleElement>(e);
        blocks[static_cast<std::size_t>(e)].epsilon = element_epsilon[e];
        RealMatrix b(n_sites, n_sites);
        for (Eigen::Index i = 0; i < n_sites; ++i)
            for (Eigen::Index j = 0; j < n_sites; ++j)
                b(i, j) = op(4 * i + e, 4 * j + e).real();
        blocks[static_cast<std::size_t>(e)].matrix = std::move(b);
    }
    return blocks;
}

Matrix block_reassemble(const std::vector<EpsilonBlock>& blocks) {
    if (blocks.size() != 4)
        throw std::invalid_argument("block_reassemble: expected four element blocks");
    const Eigen::Index n_sites = blocks.front().matrix.rows();
    for (const auto& block : blocks)
        if (block.matrix.rows() != n_sites || block.matrix.cols() != n_sites)
            throw std::invalid_argument("block_reassemble: inconsistent block dimensions");
    Matrix op = Matrix::Zero(4 * n_sites, 4 * n_sites);
    for (const auto& block : blocks) {
        const int e = static_cast<int>(block.element);
        for (Eigen::Index i = 0; i < n_sites; ++i)
            for (Eigen::Index j = 0; j < n_sites; ++j)
                op(4 * i + e, 4 * j + e) = block.matrix(i, j);
    }
    return op;
}

} // namespace radpair
