#include "radpair/expm.hpp"

#include <cmath>
#include <stdexcept>

namespace radpair {

namespace {

// Numerators/denominators of the [m/m] Pade approximant to exp(x):
// exp(A) ~ (V - U)^{-1} (V + U) with U odd and V even in A.

void pade3(const Matrix& a, Matrix& u, Matrix& v) {
    static const double b[] = {120., 60., 12., 1.};
    const Matrix e = Matrix::Identity(a.rows(), a.cols());
    const Matrix a2 = a * a;
    u = a * (b[3] * a2 + b[1] * e);
    v = b[2] * a2 + b[0] * e;
}

void pade5(const Matrix& a, Matrix& u, Matrix& v) {
    static const double b[] = {30240., 15120., 3360., 420., 30., 1.};
    const Matrix e = Matrix::Identity(a.rows(), a.cols());
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    u = a * (b[5] * a4 + b[3] * a2 + b[1] * e);
    v = b[4] * a4 + b[2] * a2 + b[0] * e;
}

void pade7(const Matrix& a, Matrix& u, Matrix& v) {
    static const double b[] = {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
    const Matrix e = Matrix::Identity(a.rows(), a.cols());
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;
    u = a * (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * e);
    v = b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * e;
}

void pade9(const Matrix& a, Matrix& u, Matrix& v) {
    static const double b[] = {17643225600., 8821612800., 2075673600., 302702400., 30270240.,
                               2162160.,     110880.,     3960.,       90.,        1.};
    const Matrix e = Matrix::Identity(a.rows(), a.cols());
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;
    const Matrix a8 = a6 * a2;
    u = a * (b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * e);
    v = b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * e;
}

void pade13(const Matrix& a, Matrix& u, Matrix& v) {
    static const double b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                               1187353796428800.,  129060195264000.,   10559470521600.,
                               670442572800.,      33522128640.,       1323241920.,
                               40840800.,          960960.,            16380.,
                               182.,               1.};
    const Matrix e = Matrix::Identity(a.rows(), a.cols());
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;
    u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * e);
    v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * e;
}

} // namespace

Matrix expm(const Matrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("expm: matrix must be square");
    if (!a.allFinite())
        throw std::invalid_argument("expm: non-finite entries");
    if (a.rows() == 0) return a;

    const double l1norm = a.cwiseAbs().colwise().sum().maxCoeff();

    Matrix u, v;
    int squarings = 0;
    if (l1norm < 1.495585217958292e-2) {
        pade3(a, u, v);
    } else if (l1norm < 2.539398330063230e-1) {
        pade5(a, u, v);
    } else if (l1norm < 9.504178996162932e-1) {
        pade7(a, u, v);
    } else if (l1norm < 2.097847961257068e0) {
        pade9(a, u, v);
    } else {
        // Scale by 2^-s so the norm falls below the degree-13 threshold.
        const double theta13 = 5.371920351148152;
        std::frexp(l1norm / theta13, &squarings);
        if (squarings < 0) squarings = 0;
        const Matrix scaled = a * std::ldexp(1.0, -squarings);
        pade13(scaled, u, v);
    }

    Matrix result = (v - u).partialPivLu().solve(v + u);
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

ExpmWithIntegral expm_with_integral(const Matrix& a, double t) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("expm_with_integral: matrix must be square");
    const Eigen::Index n = a.rows();
    // exp([[A t, I t], [0, 0]]) = [[exp(A t), int_0^t exp(A s) ds], [0, I]]
    Matrix augmented = Matrix::Zero(2 * n, 2 * n);
    augmented.topLeftCorner(n, n) = a * t;
    augmented.topRightCorner(n, n) = Matrix::Identity(n, n) * t;
    const Matrix big = expm(augmented);
    return {big.topLeftCorner(n, n), big.topRightCorner(n, n)};
}

} // namespace radpair
