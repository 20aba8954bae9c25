#ifndef RADPAIR_EXPM_HPP
#define RADPAIR_EXPM_HPP

// Dense matrix exponential by scaling and squaring with diagonal Pade
// approximants (degrees 3/5/7/9/13, switched on the 1-norm), plus the
// running integral of the exponential via one block-augmented call.

#include "radpair/types.hpp"

namespace radpair {

// exp(A) for a square complex matrix. Throws std::invalid_argument on a
// non-square or non-finite input.
Matrix expm(const Matrix& a);

struct ExpmWithIntegral {
    Matrix exponential; // exp(A t)
    Matrix integral;    // int_0^t exp(A s) ds
};

// Both exp(A t) and its integral from a single exponential of the
// augmented matrix [[A t, I t], [0, 0]].
ExpmWithIntegral expm_with_integral(const Matrix& a, double t);

} // namespace radpair

#endif
