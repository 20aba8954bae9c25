#ifndef RADPAIR_LIOUVILLE_HPP
#define RADPAIR_LIOUVILLE_HPP

// Liouville-space conventions for the minimal {S, T} spin basis: row-major
// vectorization, (anti)commutator superoperators, effective purity,
// projective collapse and the partial trace over molecular conformations.
//
// Row-major stacking is chosen so that the superoperator of rho -> A rho B
// is A (x) B^T; the commutator superoperators below then take their textbook
// Kronecker form without reshuffling.

#include <vector>

#include "radpair/types.hpp"

namespace radpair {

// Basis index 0 is the singlet, index 1 the T0 triplet. The Liouville
// ordering of a 2x2 density matrix is {SS, ST, TS, TT}.
enum SpinIndex { spin_singlet = 0, spin_triplet = 1 };

enum LiouvilleElement { elem_SS = 0, elem_ST = 1, elem_TS = 2, elem_TT = 3 };

// Liouville index of matrix element (i, j) for an n-dimensional basis.
constexpr Eigen::Index liouville_index(Eigen::Index i, Eigen::Index j, Eigen::Index n) {
    return n * i + j;
}

Matrix kron(const Matrix& a, const Matrix& b);

// Row-major stacking of a square matrix; element (i, j) lands at n*i + j.
Vector vectorize(const Matrix& rho);
Matrix devectorize(const Vector& v);

// Superoperator of rho -> A rho + rho A, i.e. A (x) E + E (x) A^T.
Matrix anticommutator_superop(const Matrix& a);

// Superoperator of rho -> A rho - rho A, i.e. A (x) E - E (x) A^T.
Matrix commutator_superop(const Matrix& a);

// Tr(rho^2) / [Tr(rho)]^2: purity of the trace-renormalized density matrix.
// Well defined for unnormalized reactant matrices; throws std::domain_error
// when Tr(rho) vanishes (fully reacted system).
double effective_purity(const Matrix& rho);

// Orthogonal projectors onto the singlet and triplet states. `complete`
// checks Q_S + Q_T = E and Q_S Q_T = 0 within tol.
struct ProjectorSet {
    SpinMatrix singlet;
    SpinMatrix triplet;

    static ProjectorSet spin_st();
    bool complete(double tol = algebra_tol) const;
};

// Von Neumann measurement channel: rho -> Q_S rho Q_S + Q_T rho Q_T.
// Zeroes the S-T coherences, preserves populations and trace.
// Throws std::invalid_argument if the projector set is not complete.
SpinMatrix projective_collapse(const SpinMatrix& rho, const ProjectorSet& projectors = ProjectorSet::spin_st());

// Partial trace over the molecular conformation: element-wise sum of the
// per-site spin blocks. Throws std::invalid_argument on an empty list.
SpinMatrix trace_out_sites(const std::vector<SpinMatrix>& site_blocks);

// Stacking between a per-site block list and the site-major Liouville
// vector used by the multi-site kinetic operators.
Vector stack_sites(const std::vector<SpinMatrix>& site_blocks);
std::vector<SpinMatrix> unstack_sites(const Vector& v);

// Validation helpers; checks are on demand, never enforced mutations, so
// unnormalized reactant matrices pass through untouched.
bool is_hermitian(const Matrix& m, double tol = algebra_tol);
bool is_positive_semidefinite(const Matrix& m, double tol = 1e-10);

// Spin state c_S |S> + c_T |T>, normalized at construction.
struct PureSpinState {
    Complex c_singlet;
    Complex c_triplet;

    PureSpinState(Complex cs, Complex ct);
    SpinMatrix density() const; // |psi><psi|
};

} // namespace radpair

#endif
