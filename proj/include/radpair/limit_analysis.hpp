#ifndef RADPAIR_LIMIT_ANALYSIS_HPP
#define RADPAIR_LIMIT_ANALYSIS_HPP

// Effective-operator extraction from multi-site evolutions: decay-rate
// fits, the coherence/population dephasing ratio that discriminates the
// Haberkorn form (1/2) from the measurement form (1), the five canonical
// limiting-case checks and the crossover scan between the two regimes.

#include <string>
#include <vector>

#include "radpair/dynamics.hpp"
#include "radpair/kinetic_schemes.hpp"

namespace radpair {

struct FitResult {
    double rate = 0.0;
    double residual = 0.0; // rms misfit of log(values) inside the window
};

// Least-squares slope of log(values) against time over window_begin <= t <=
// window_end. The window is expected to exclude the fast initial transient.
// Throws std::domain_error on non-positive samples inside the window (an
// oscillatory H != 0 evolution; rate fits require H = 0) and
// std::invalid_argument when fewer than two samples fall in the window.
FitResult fit_decay_rate(const std::vector<double>& times, const std::vector<double>& values,
                         double window_begin, double window_end);

// Exact slow decay rate of a real kinetics block: its smallest eigenvalue.
double slow_rate(const RealMatrix& block);

struct FitOptions {
    // Fit window in units of the inverse slow rate of the fitted element.
    double window_begin_scale = 0.5;
    double window_end_scale = 3.0;
    int samples = 600; // trajectory samples spanning [0, window end]
};

// Fitted decay rate of |rho_ST| divided by the fitted decay rate of rho_SS
// for an H = 0 evolution started from (|S> + |T>)/sqrt(2) in the first
// site. Requires singlet-only channels. 1/2 signals Haberkorn behaviour,
// 1 signals measurement behaviour.
double dephasing_ratio(const KineticScheme& scheme, const FitOptions& options = {});

// Same ratio from the exact slow eigenvalues of the ST and SS blocks of a
// kinetic superoperator, bypassing trajectory fits.
double dephasing_ratio_exact(const Matrix& kinetic_op);

struct LimitCaseResult {
    char id = '?'; // 'a'..'e'
    std::string description;
    double predicted = 0.0;
    double fitted = 0.0;
    double rel_err = 0.0;
    bool passed = false;
    std::vector<double> element_rates_predicted;
    std::vector<double> element_rates_fitted;
    std::string detail;
};

struct LimitCheckOptions {
    double separation = 100.0; // factor per rate inequality in the canonical schemes
    double rate_tol = 0.0;     // 0 keeps the per-case defaults
    FitOptions fit;
};

// The five limiting-case reductions:
//   a  uniform tunnelling rates: two-site evolution equals the single-site
//      Haberkorn evolution exactly
//   b  fast tunnelling from a rare conformation: measurement operator with
//      k_S = k12
//   c  slow tunnelling from a rare conformation: Haberkorn operator with
//      k_S = k_S2 k12 / k21
//   d  common reactive intermediate, k_S2 = k_T2: plain exponential loss at
//      k12, indistinguishable from a non-spin-selective reaction
//   e  separate singlet/triplet intermediates: measurement operator with
//      k_S = k12, k_T = k13
LimitCaseResult verify_limit_case(char id, const LimitCheckOptions& options = {});
std::vector<LimitCaseResult> verify_limits(const LimitCheckOptions& options = {});

struct CrossoverPoint {
    double ratio;     // k_S2 / k21
    double dephasing; // fitted dephasing ratio
};

// Sweeps k_S2 across the given k_S2/k21 grid for a two-site scheme with
// k_S1 = 0, mapping the crossover from Haberkorn (~1/2) to measurement
// (~1) behaviour.
std::vector<CrossoverPoint> crossover_scan(const std::vector<double>& ratio_grid, double k12,
                                           double k21, const FitOptions& options = {});

} // namespace radpair

#endif
