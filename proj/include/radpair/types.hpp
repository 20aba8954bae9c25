#ifndef RADPAIR_TYPES_HPP
#define RADPAIR_TYPES_HPP

#include <complex>

#include <Eigen/Dense>

namespace radpair {

using Complex = std::complex<double>;

// Dense complex matrices throughout; everything here is at most ~16x16 for
// the named schemes, so there is no sparse path.
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SpinMatrix = Eigen::Matrix2cd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// A superoperator acts on row-major vectorized density matrices.
using Superoperator = Eigen::MatrixXcd;

// Default numerical tolerances: `equality_tol` for comparing computed
// quantities, `algebra_tol` for identities that hold exactly in real
// arithmetic (hermiticity, superoperator algebra).
inline constexpr double equality_tol = 1e-10;
inline constexpr double algebra_tol = 1e-12;

} // namespace radpair

#endif
