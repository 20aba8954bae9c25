#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

namespace {

using radpair::cli::RunConfig;

// Staging area for command-line overrides; only values the user actually
// passed replace config-file entries.
struct Overrides {
    std::optional<std::string> kind, operator_family, site_k_s, site_k_t, exchange;
    std::optional<double> k_s, k_t, k_s1, k_s2, k_t2, k_t3, k12, k21, k13, k31;
    std::optional<std::string> c_s, c_t, site_distribution, h00, h01, h10, h11;
    std::optional<double> start, stop;
    std::optional<int> points;
    std::optional<std::string> spacing, out, only_case;
    std::optional<double> factor, tol, ratio_min, ratio_max, scan_k12, scan_k21;
    std::optional<int> scan_points;
};

void apply_overrides(RunConfig& config, const Overrides& ov) {
    const auto set = [](auto& target, const auto& src) {
        if (src) target = *src;
    };
    set(config.kind, ov.kind);
    if (ov.operator_family) {
        config.operator_family = *ov.operator_family;
        config.operator_family_set = true;
    }
    set(config.k_s, ov.k_s);
    set(config.k_t, ov.k_t);
    set(config.k_s1, ov.k_s1);
    set(config.k_s2, ov.k_s2);
    set(config.k_t2, ov.k_t2);
    set(config.k_t3, ov.k_t3);
    set(config.k12, ov.k12);
    set(config.k21, ov.k21);
    set(config.k13, ov.k13);
    set(config.k31, ov.k31);
    if (ov.site_k_s) config.site_k_s = radpair::cli::parse_double_list(*ov.site_k_s);
    if (ov.site_k_t) config.site_k_t = radpair::cli::parse_double_list(*ov.site_k_t);
    if (ov.exchange) config.exchange = radpair::cli::parse_exchange_list(*ov.exchange);
    if (ov.c_s) config.c_s = radpair::cli::parse_complex(*ov.c_s);
    if (ov.c_t) config.c_t = radpair::cli::parse_complex(*ov.c_t);
    if (ov.site_distribution)
        config.site_distribution = radpair::cli::parse_double_list(*ov.site_distribution);
    if (ov.h00) config.hamiltonian(0, 0) = radpair::cli::parse_complex(*ov.h00);
    if (ov.h01) config.hamiltonian(0, 1) = radpair::cli::parse_complex(*ov.h01);
    if (ov.h10) config.hamiltonian(1, 0) = radpair::cli::parse_complex(*ov.h10);
    if (ov.h11) config.hamiltonian(1, 1) = radpair::cli::parse_complex(*ov.h11);
    set(config.grid_start, ov.start);
    set(config.grid_stop, ov.stop);
    set(config.grid_points, ov.points);
    set(config.grid_spacing, ov.spacing);
    set(config.out_path, ov.out);
    set(config.factor, ov.factor);
    set(config.tol, ov.tol);
    set(config.only_case, ov.only_case);
    set(config.ratio_min, ov.ratio_min);
    set(config.ratio_max, ov.ratio_max);
    set(config.scan_points, ov.scan_points);
    set(config.scan_k12, ov.scan_k12);
    set(config.scan_k21, ov.scan_k21);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Liouville-space reaction superoperators and multi-site kinetics for "
                 "spin-selective radical-pair reactions"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string config_path;
    Overrides ov;
    app.add_option("--config", config_path, "configuration file (key = value with [sections])");
    app.add_option("--out", ov.out, "output path (defaults to stdout for CSV commands)");

    app.add_option("--kind", ov.kind,
                   "scheme kind: single | two_site | common_intermediate | three_site | generic");
    app.add_option("--operator", ov.operator_family,
                   "single-site reaction operator: haberkorn | measurement");
    app.add_option("--kS", ov.k_s, "single-site singlet rate");
    app.add_option("--kT", ov.k_t, "single-site triplet rate");
    app.add_option("--kS1", ov.k_s1, "site-1 singlet tunnelling rate");
    app.add_option("--kS2", ov.k_s2, "site-2 singlet tunnelling rate");
    app.add_option("--kT2", ov.k_t2, "site-2 triplet tunnelling rate");
    app.add_option("--kT3", ov.k_t3, "site-3 triplet tunnelling rate");
    app.add_option("--k12", ov.k12, "exchange rate R1 -> R2");
    app.add_option("--k21", ov.k21, "exchange rate R2 -> R1");
    app.add_option("--k13", ov.k13, "exchange rate R1 -> R3");
    app.add_option("--k31", ov.k31, "exchange rate R3 -> R1");
    app.add_option("--site-kS", ov.site_k_s, "generic scheme: per-site singlet rates, comma list");
    app.add_option("--site-kT", ov.site_k_t, "generic scheme: per-site triplet rates, comma list");
    app.add_option("--exchange", ov.exchange,
                   "generic scheme: comma list of i->j:rate entries (1-based sites)");

    app.add_option("--c_S", ov.c_s, "initial singlet amplitude, re,im");
    app.add_option("--c_T", ov.c_t, "initial triplet amplitude, re,im");
    app.add_option("--site-distribution", ov.site_distribution,
                   "initial site populations, comma list summing to 1");
    app.add_option("--H00", ov.h00, "Hamiltonian entry (0,0), re,im");
    app.add_option("--H01", ov.h01, "Hamiltonian entry (0,1), re,im");
    app.add_option("--H10", ov.h10, "Hamiltonian entry (1,0), re,im");
    app.add_option("--H11", ov.h11, "Hamiltonian entry (1,1), re,im");

    app.add_option("--start", ov.start, "time grid start");
    app.add_option("--stop", ov.stop, "time grid stop");
    app.add_option("--points", ov.points, "time grid points");
    app.add_option("--spacing", ov.spacing, "time grid spacing: linear | log");

    app.add_option("--factor", ov.factor, "limits: separation factor per rate inequality");
    app.add_option("--tol", ov.tol, "limits: override the per-case rate tolerance");
    app.add_option("--case", ov.only_case, "limits: run a single case (a..e)");

    app.add_option("--ratio-min", ov.ratio_min, "scan: smallest kS2/k21 ratio");
    app.add_option("--ratio-max", ov.ratio_max, "scan: largest kS2/k21 ratio");
    app.add_option("--scan-points", ov.scan_points, "scan: number of grid points");
    app.add_option("--scan-k12", ov.scan_k12, "scan: fixed k12");
    app.add_option("--scan-k21", ov.scan_k21, "scan: fixed k21");

    auto* operators_cmd = app.add_subcommand("operators", "print the assembled superoperators");
    auto* simulate_cmd = app.add_subcommand("simulate", "propagate and write the trajectory CSV");
    auto* limits_cmd = app.add_subcommand("limits", "run the limiting-case reduction checks");
    auto* scan_cmd =
        app.add_subcommand("scan", "sweep kS2/k21 and tabulate the dephasing ratio");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        RunConfig config;
        if (!config_path.empty()) config = radpair::cli::load_config(config_path);
        apply_overrides(config, ov);

        if (operators_cmd->parsed()) return radpair::cli::cmd_operators(config);
        if (simulate_cmd->parsed()) return radpair::cli::cmd_simulate(config);
        if (limits_cmd->parsed()) return radpair::cli::cmd_limits(config);
        if (scan_cmd->parsed()) return radpair::cli::cmd_scan(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
