#ifndef RADPAIR_TOOLS_CONFIG_HPP
#define RADPAIR_TOOLS_CONFIG_HPP

// Run configuration for the CLI: a flat key = value file with [sections],
// every key overridable from the command line. Complex values are given as
// "re,im" pairs.

#include <string>
#include <vector>

#include "radpair/kinetic_schemes.hpp"
#include "radpair/types.hpp"

namespace radpair::cli {

struct RunConfig {
    // [scheme]
    std::string kind = "single"; // single | two_site | common_intermediate | three_site | generic
    std::string operator_family = "haberkorn"; // haberkorn | measurement (single-site only)
    bool operator_family_set = false;
    double k_s = 1.0, k_t = 0.0;                      // single
    double k_s1 = 0.0, k_s2 = 0.0;                    // two_site
    double k_t2 = 0.0, k_t3 = 0.0;                    // common_intermediate / three_site
    double k12 = 0.0, k21 = 0.0, k13 = 0.0, k31 = 0.0;

    // generic scheme
    struct ExchangeEntry {
        int from = 0; // 1-based site indices
        int to = 0;
        double rate = 0.0;
    };
    std::vector<double> site_k_s;
    std::vector<double> site_k_t;
    std::vector<ExchangeEntry> exchange;

    // [initial]
    Complex c_s{1.0, 0.0};
    Complex c_t{0.0, 0.0};
    std::vector<double> site_distribution; // empty = all population in site 1

    // [hamiltonian]
    SpinMatrix hamiltonian = SpinMatrix::Zero();

    // [grid]
    double grid_start = 0.0;
    double grid_stop = 10.0;
    int grid_points = 201;
    std::string grid_spacing = "linear"; // linear | log

    // [output]
    std::string out_path;

    // [limits]
    double factor = 100.0;
    double tol = 0.0; // 0 keeps per-case defaults
    std::string only_case;

    // [scan]
    double ratio_min = 1e-3;
    double ratio_max = 1e3;
    int scan_points = 25;
    double scan_k12 = 1.0;
    double scan_k21 = 100.0;
};

// Reads a config file; throws std::runtime_error carrying "path:line:"
// diagnostics for unreadable files, malformed lines, unknown keys and
// unparsable values.
RunConfig load_config(const std::string& path);

// "re,im" or plain "re".
Complex parse_complex(const std::string& text);

// Comma-separated doubles.
std::vector<double> parse_double_list(const std::string& text);

// Comma-separated "i->j:rate" exchange entries, 1-based sites.
std::vector<RunConfig::ExchangeEntry> parse_exchange_list(const std::string& text);

// Builds the kinetic scheme described by the config (any kind, including
// single); throws std::invalid_argument on inconsistent input.
KineticScheme make_scheme(const RunConfig& config);

// Sample times from the [grid] section; throws on invalid grids.
std::vector<double> make_time_grid(const RunConfig& config);

} // namespace radpair::cli

#endif
