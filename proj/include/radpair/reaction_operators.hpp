#ifndef RADPAIR_REACTION_OPERATORS_HPP
#define RADPAIR_REACTION_OPERATORS_HPP

// Single-site 4x4 reaction superoperators for spin-selective recombination
// in the {S, T} basis, in both the conventional (Haberkorn, anticommutator)
// and the quantum-measurement form, plus the coherent Hamiltonian part.
//
// Sign convention: d rho/dt = -V rho with V = i H^- + K, so every kinetic
// superoperator K built here has a non-negative spectrum.

#include "radpair/liouville.hpp"
#include "radpair/types.hpp"

namespace radpair {

// Recombination rates of the singlet and triplet channels (1/time).
struct ChannelRates {
    double singlet = 0.0;
    double triplet = 0.0;

    void validate() const; // throws std::invalid_argument on a negative rate
};

// Haberkorn operator (kS/2){Q_S, .} + (kT/2){Q_T, .}:
// diag(kS, (kS+kT)/2, (kS+kT)/2, kT). Coherences decay at half the
// population rates, which is exactly the rate that preserves the purity of
// the surviving radical pairs.
Matrix haberkorn_superop(const ChannelRates& rates);

// Quantum-measurement operator kS(E(x)E - Q_T(x)Q_T) + kT(E(x)E - Q_S(x)Q_S):
// diag(kS, kS+kT, kS+kT, kT). Null measurements dephase the coherences at
// the full population rates.
Matrix measurement_superop(const ChannelRates& rates);

// Direct matrix-product route for the measurement equation of motion,
//   d rho/dt = -kS rho + kS Q_T rho Q_T - kT rho + kT Q_S rho Q_S,
// kept independent of the superoperator path as a cross-check.
SpinMatrix measurement_rhs(const SpinMatrix& rho, const ChannelRates& rates);

// i [H, .] as a 4x4 superoperator. Adding a kinetic operator K yields
// V = i H^- + K with d rho/dt = -V rho. Throws if H is not Hermitian
// within hermiticity_tol.
Matrix hamiltonian_superop(const SpinMatrix& h, double hermiticity_tol = algebra_tol);

// Demo Hamiltonian [[0, w/2], [w/2, 0]] mixing S and T at angular
// frequency w; handy default, not tied to any particular radical pair.
SpinMatrix mixing_hamiltonian(double omega);

} // namespace radpair

#endif
