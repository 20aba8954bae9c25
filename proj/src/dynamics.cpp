#include "radpair/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "radpair/expm.hpp"
#include "radpair/reaction_operators.hpp"

namespace radpair {

namespace {

void check_times(const std::vector<double>& times) {
    if (times.empty()) throw std::invalid_argument("propagate: empty time grid");
    double prev = -1.0;
    for (double t : times) {
        if (!std::isfinite(t) || t < 0.0)
            throw std::invalid_argument("propagate: times must be finite and non-negative");
        if (t <= prev) throw std::invalid_argument("propagate: times must be strictly increasing");
        prev = t;
    }
}

// Purity of the traced state; a trace that has fully decayed (underflowed
// to zero) is reported as pure.
double traced_purity(const SpinMatrix& state) {
    if (std::abs(state.trace()) == 0.0) return 1.0;
    return effective_purity(state);
}

} // namespace

Trajectory propagate(const Matrix& v, const Vector& rho0, const std::vector<double>& times,
                     const std::vector<ChannelRates>& site_rates) {
    if (v.rows() != v.cols()) throw std::invalid_argument("propagate: V must be square");
    if (!v.allFinite()) throw std::invalid_argument("propagate: V has non-finite entries");
    if (v.rows() % 4 != 0 || v.rows() == 0)
        throw std::invalid_argument("propagate: V must be 4N x 4N");
    if (rho0.size() != v.rows())
        throw std::invalid_argument("propagate: initial state does not match V");
    check_times(times);

    const auto n_sites = static_cast<std::size_t>(v.rows() / 4);
    const bool with_yields = !site_rates.empty();
    if (with_yields && site_rates.size() != n_sites)
        throw std::invalid_argument("propagate: need one ChannelRates entry per site");

    Trajectory traj;
    traj.times = times;
    traj.has_channel_metadata = with_yields;
    traj.initial_trace = trace_out_sites(unstack_sites(rho0)).trace().real();

    const Matrix generator = -v;
    for (double t : times) {
        const auto [propagator, integral] = expm_with_integral(generator, t);
        const Vector state_vec = propagator * rho0;
        traj.states.push_back(trace_out_sites(unstack_sites(state_vec)));
        traj.purity.push_back(traced_purity(traj.states.back()));

        double yield_s = 0.0;
        double yield_t = 0.0;
        if (with_yields) {
            const Vector accumulated = integral * rho0;
            for (std::size_t s = 0; s < n_sites; ++s) {
                const auto base = 4 * static_cast<Eigen::Index>(s);
                yield_s += site_rates[s].singlet * accumulated(base + elem_SS).real();
                yield_t += site_rates[s].triplet * accumulated(base + elem_TT).real();
            }
        }
        traj.product_singlet.push_back(yield_s);
        traj.product_triplet.push_back(yield_t);
    }
    return traj;
}

Trajectory propagate_scheme(const KineticScheme& scheme, const PureSpinState& psi0,
                            const std::vector<double>& times, const SpinMatrix& hamiltonian) {
    scheme.validate();
    const int n = scheme.num_sites();

    Matrix v = build_generic(scheme);
    if (hamiltonian.cwiseAbs().maxCoeff() > 0.0) {
        const Matrix h_super = hamiltonian_superop(hamiltonian);
        for (int i = 0; i < n; ++i) v.block(4 * i, 4 * i, 4, 4) += h_super;
    }

    const SpinMatrix rho_spin = psi0.density();
    std::vector<SpinMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) blocks.push_back(scheme.initial_distribution(i) * rho_spin);

    std::vector<ChannelRates> rates;
    rates.reserve(static_cast<std::size_t>(n));
    for (const auto& site : scheme.sites) rates.push_back(site.rates);

    return propagate(v, stack_sites(blocks), times, rates);
}

Matrix analytic_single_site(const PureSpinState& state0, double k_singlet, double t) {
    if (k_singlet < 0.0) throw std::invalid_argument("analytic_single_site: negative rate");
    if (t < 0.0) throw std::invalid_argument("analytic_single_site: negative time");
    const Complex cs = state0.c_singlet;
    const Complex ct = state0.c_triplet;
    const double decay = std::exp(-k_singlet * t);
    const double half_decay = std::exp(-0.5 * k_singlet * t);

    Matrix rho = Matrix::Zero(3, 3);
    rho(0, 0) = cs * std::conj(cs) * (1.0 - decay);
    rho(1, 1) = cs * std::conj(cs) * decay;
    rho(1, 2) = cs * std::conj(ct) * half_decay;
    rho(2, 1) = ct * std::conj(cs) * half_decay;
    rho(2, 2) = ct * std::conj(ct);
    return rho;
}

BiexponentialSolution solve_block_2x2(const EpsilonBlock& block, const Eigen::Vector2d& p0,
                                      const std::vector<double>& times) {
    if (block.matrix.rows() != 2 || block.matrix.cols() != 2)
        throw std::invalid_argument("solve_block_2x2: block must be 2 x 2");
    const Eigen::Matrix2d m = block.matrix;
    const Eigen::Matrix2d identity = Eigen::Matrix2d::Identity();

    const double tr = m.trace();
    const double det = m.determinant();
    const double disc = tr * tr - 4.0 * det;
    const double degeneracy_floor = 1e-12 * (tr * tr + 4.0 * std::abs(det));

    BiexponentialSolution sol;
    sol.samples.reserve(times.size());

    if (disc > degeneracy_floor) {
        // Distinct real eigenvalues: Lagrange form of exp(-M t).
        const double root = std::sqrt(disc);
        sol.rate_fast = 0.5 * (tr + root);
        sol.rate_slow = 0.5 * (tr - root);
        sol.amplitude_fast = (m - sol.rate_slow * identity) * p0 / (sol.rate_fast - sol.rate_slow);
        sol.amplitude_slow = (sol.rate_fast * identity - m) * p0 / (sol.rate_fast - sol.rate_slow);
        for (double t : times)
            sol.samples.push_back(std::exp(-sol.rate_fast * t) * sol.amplitude_fast +
                                  std::exp(-sol.rate_slow * t) * sol.amplitude_slow);
    } else if (disc >= -degeneracy_floor) {
        // Eigenvalue collision: Jordan branch, exp(-M t) = e^{-l t}(I - (M - l I) t).
        const double rate = 0.5 * tr;
        sol.degenerate = true;
        sol.rate_fast = rate;
        sol.rate_slow = rate;
        sol.amplitude_slow = p0;
        sol.amplitude_fast = -(m - rate * identity) * p0;
        for (double t : times)
            sol.samples.push_back(std::exp(-rate * t) * (sol.amplitude_slow + t * sol.amplitude_fast));
    } else {
        // Complex pair a +- i b; cannot arise from the kinetic schemes here
        // (their off-diagonal product is non-negative) but handled so the
        // solver is total on real 2x2 input.
        const double alpha = 0.5 * tr;
        const double beta = 0.5 * std::sqrt(-disc);
        sol.oscillatory = true;
        sol.rate_fast = alpha;
        sol.rate_slow = alpha;
        for (double t : times) {
            const Eigen::Matrix2d rotation =
                std::cos(beta * t) * identity + std::sin(beta * t) / beta * (alpha * identity - m);
            sol.samples.push_back(std::exp(-alpha * t) * (rotation * p0));
        }
    }
    return sol;
}

YieldSeries product_yields(const Trajectory& trajectory) {
    if (!trajectory.has_channel_metadata)
        throw std::invalid_argument("product_yields: trajectory carries no channel metadata");
    return {trajectory.product_singlet, trajectory.product_triplet};
}

} // namespace radpair
