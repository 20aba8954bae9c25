#ifndef RADPAIR_DYNAMICS_HPP
#define RADPAIR_DYNAMICS_HPP

// Time propagation of d rho/dt = -V rho via the dense matrix exponential,
// the closed-form single-site solution in the enlarged {P, S, T} basis,
// analytic 2x2 element-block solutions and product-yield accounting.

#include <vector>

#include "radpair/kinetic_schemes.hpp"
#include "radpair/liouville.hpp"
#include "radpair/types.hpp"

namespace radpair {

// Sampled evolution, traced over molecular conformations. Product
// populations are the per-channel loss integrals
//   product_singlet(t) = sum_i k_Si int_0^t rho_SS^(i) ds
// (triplet analogue), evaluated exactly through the augmented-matrix
// integral of the propagator, so that
//   Tr(state) + product_singlet + product_triplet = initial_trace
// holds at every sample. Yields are only available when the propagation
// was given per-site channel rates.
struct Trajectory {
    std::vector<double> times;
    std::vector<SpinMatrix> states;
    std::vector<double> purity;
    std::vector<double> product_singlet;
    std::vector<double> product_triplet;
    double initial_trace = 0.0;
    bool has_channel_metadata = false;
};

// rho(t) = exp(-V t) rho0 on the given sample times (non-negative, strictly
// increasing). V must be 4N x 4N and finite; rho0 is the site-major stacked
// Liouville vector. site_rates (one entry per site) enables product-yield
// bookkeeping; pass {} when the channels are unknown.
Trajectory propagate(const Matrix& v, const Vector& rho0, const std::vector<double>& times,
                     const std::vector<ChannelRates>& site_rates = {});

// Convenience wrapper: V = build_generic(scheme) + per-site i[H, .], initial
// state psi0 distributed over sites by scheme.initial_distribution.
Trajectory propagate_scheme(const KineticScheme& scheme, const PureSpinState& psi0,
                            const std::vector<double>& times,
                            const SpinMatrix& hamiltonian = SpinMatrix::Zero());

// Closed-form singlet-channel decay from a pure state in the enlarged
// {P, S, T} basis; proper density matrix with unit trace for all t >= 0.
Matrix analytic_single_site(const PureSpinState& state0, double k_singlet, double t);

// Solution of dp/dt = -M p for a real 2x2 kinetics block.
// Non-degenerate: p(t) = exp(-rate_fast t) amplitude_fast
//                      + exp(-rate_slow t) amplitude_slow.
// Degenerate (eigenvalue collision): p(t) = exp(-rate t) (amplitude_slow
// + t amplitude_fast). A complex eigenvalue pair (impossible for blocks of
// the kinetic schemes here) is reported via `oscillatory`, with the decay
// rate in rate_fast/rate_slow and exact sampled values.
struct BiexponentialSolution {
    double rate_fast = 0.0;
    double rate_slow = 0.0;
    Eigen::Vector2d amplitude_fast = Eigen::Vector2d::Zero();
    Eigen::Vector2d amplitude_slow = Eigen::Vector2d::Zero();
    bool degenerate = false;
    bool oscillatory = false;
    std::vector<Eigen::Vector2d> samples;
};

BiexponentialSolution solve_block_2x2(const EpsilonBlock& block, const Eigen::Vector2d& p0,
                                      const std::vector<double>& times);

struct YieldSeries {
    std::vector<double> singlet;
    std::vector<double> triplet;
};

// Accumulated product populations of a trajectory; throws
// std::invalid_argument when the trajectory carries no channel metadata.
YieldSeries product_yields(const Trajectory& trajectory);

} // namespace radpair

#endif
