#include "radpair/reaction_operators.hpp"

#include <stdexcept>

namespace radpair {

void ChannelRates::validate() const {
    if (singlet < 0.0 || triplet < 0.0)
        throw std::invalid_argument("ChannelRates: rates must be non-negative");
}

Matrix haberkorn_superop(const ChannelRates& rates) {
    rates.validate();
    const auto p = ProjectorSet::spin_st();
    return 0.5 * rates.singlet * anticommutator_superop(p.singlet) +
           0.5 * rates.triplet * anticommutator_superop(p.triplet);
}

Matrix measurement_superop(const ChannelRates& rates) {
    rates.validate();
    const auto p = ProjectorSet::spin_st();
    const Matrix e = Matrix::Identity(2, 2);
    const Matrix ee = kron(e, e);
    return rates.singlet * (ee - kron(p.triplet, p.triplet.transpose())) +
           rates.triplet * (ee - kron(p.singlet, p.singlet.transpose()));
}

SpinMatrix measurement_rhs(const SpinMatrix& rho, const ChannelRates& rates) {
    rates.validate();
    const auto p = ProjectorSet::spin_st();
    SpinMatrix rhs = -(rates.singlet + rates.triplet) * rho;
    rhs += rates.singlet * (p.triplet * rho * p.triplet);
    rhs += rates.triplet * (p.singlet * rho * p.singlet);
    return rhs;
}

Matrix hamiltonian_superop(const SpinMatrix& h, double hermiticity_tol) {
    if (!is_hermitian(h, hermiticity_tol))
        throw std::invalid_argument("hamiltonian_superop: H must be Hermitian");
    return Complex(0.0, 1.0) * commutator_superop(h);
}

SpinMatrix mixing_hamiltonian(double omega) {
    SpinMatrix h;
    h << 0.0, 0.5 * omega, 0.5 * omega, 0.0;
    return h;
}

} // namespace radpair
