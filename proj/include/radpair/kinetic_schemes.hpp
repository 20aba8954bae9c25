#ifndef RADPAIR_KINETIC_SCHEMES_HPP
#define RADPAIR_KINETIC_SCHEMES_HPP

// Multi-site stochastic-Liouville kinetic superoperators: per-conformation
// tunnelling channels (Haberkorn form) coupled by classical first-order
// exchange. Conformational superpositions are never represented; only the
// classical site populations exchange.
//
// Liouville ordering is site-major: site 1's four {SS, ST, TS, TT} elements
// first, then site 2's, and so on. block_decompose applies the site-major
// to element-major permutation, under which these operators fall apart into
// four independent real N x N blocks (one per Liouville element).

#include <string>
#include <vector>

#include "radpair/liouville.hpp"
#include "radpair/reaction_operators.hpp"
#include "radpair/types.hpp"

namespace radpair {

struct SiteSpec {
    std::string label;
    ChannelRates rates;
};

// Sites with their tunnelling channels, the exchange-rate table and the
// initial distribution of radical pairs over conformations.
// exchange(i, j) is the rate of the i -> j interconversion (flow out of i);
// the diagonal must be zero. The default distribution puts the whole
// population in the first site.
struct KineticScheme {
    std::vector<SiteSpec> sites;
    RealMatrix exchange;
    RealVector initial_distribution;

    int num_sites() const { return static_cast<int>(sites.size()); }
    void validate() const; // throws std::invalid_argument

    static KineticScheme single_site(ChannelRates rates);
    static KineticScheme two_site(double k_s1, double k_s2, double k12, double k21);
    static KineticScheme common_intermediate(double k12, double k21, double k_s2, double k_t2);
    static KineticScheme three_site(double k12, double k21, double k13, double k31,
                                    double k_s2, double k_t3);
};

// Two conformations with singlet tunnelling at k_s1, k_s2 and interchange
// k12 (R1 -> R2), k21 (R2 -> R1); 8x8 site-major matrix
//   [[K_H(k_s1) + k12 I, -k21 I], [-k12 I, K_H(k_s2) + k21 I]].
Matrix build_two_site(double k_s1, double k_s2, double k12, double k21);

// Unreactive major form R1 plus one common reactive intermediate R2 with
// parallel singlet/triplet channels; 8x8.
Matrix build_common_intermediate(double k12, double k21, double k_s2, double k_t2);

// Unreactive R1, singlet-reactive R2 and triplet-reactive R3 with no direct
// R2 <-> R3 exchange; 12x12.
Matrix build_three_site(double k12, double k21, double k13, double k31,
                        double k_s2, double k_t3);

// General N-site assembly: diagonal block i is the site's Haberkorn
// operator plus the total outflow, off-diagonal block (i, j) is -k[j->i] I.
// Specializes exactly to the dedicated builders above.
Matrix build_generic(const KineticScheme& scheme);

// One Liouville-element sector of a multi-site kinetic operator. epsilon is
// the fraction of the singlet tunnelling rate felt by the element: 1 for
// SS, 1/2 for ST and TS, 0 for TT.
struct EpsilonBlock {
    LiouvilleElement element = elem_SS;
    double epsilon = 0.0;
    RealMatrix matrix; // N x N real kinetics block
};

// Splits a site-major kinetic superoperator into its four per-element
// blocks {SS, ST, TS, TT}. Throws std::invalid_argument if the operator
// couples different Liouville elements or has imaginary entries (i.e. is
// not a kinetic scheme built by this module).
std::vector<EpsilonBlock> block_decompose(const Matrix& op);

// Reassembles the site-major operator from its four element blocks.
Matrix block_reassemble(const std::vector<EpsilonBlock>& blocks);

} // namespace radpair

#endif
