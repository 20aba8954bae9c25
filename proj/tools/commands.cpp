#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "radpair/dynamics.hpp"
#include "radpair/limit_analysis.hpp"
#include "radpair/reaction_operators.hpp"

namespace radpair::cli {

namespace {

// Full round-trip precision so downstream fits reproduce in-library fits.
std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// Opens the --out target, or hands back stdout when no path is set.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open output path '" + path + "'");
            path_ = path;
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void finish() {
        if (!file_) return;
        file_->flush();
        if (!*file_) throw std::runtime_error("failed writing output path '" + path_ + "'");
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::string path_;
};

void print_matrix_aligned(std::ostream& out, const Matrix& m) {
    const double imag_scale = m.imag().cwiseAbs().maxCoeff();
    const bool real_only = imag_scale <= 1e-15 * std::max(1.0, m.cwiseAbs().maxCoeff());
    char buf[64];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (real_only)
                std::snprintf(buf, sizeof buf, "%14.6g", m(i, j).real());
            else
                std::snprintf(buf, sizeof buf, "  (%.6g,%.6g)", m(i, j).real(), m(i, j).imag());
            out << buf;
        }
        out << "\n";
    }
}

nlohmann::json matrix_as_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

ChannelRates single_site_rates(const RunConfig& config) { return {config.k_s, config.k_t}; }

void check_operator_family(const RunConfig& config) {
    if (config.operator_family != "haberkorn" && config.operator_family != "measurement")
        throw std::invalid_argument("operator must be 'haberkorn' or 'measurement'");
    if (config.operator_family_set && config.kind != "single" &&
        config.operator_family == "measurement")
        throw std::invalid_argument(
            "operator = measurement applies to single-site runs only; multi-site schemes "
            "model tunnelling with the Haberkorn form");
}

bool has_hamiltonian(const RunConfig& config) {
    return config.hamiltonian.cwiseAbs().maxCoeff() > 0.0;
}

struct NamedOperator {
    std::string name;
    Matrix matrix;
};

std::vector<NamedOperator> assemble_operators(const RunConfig& config) {
    check_operator_family(config);
    std::vector<NamedOperator> out;
    if (config.kind == "single") {
        const auto rates = single_site_rates(config);
        const std::string suffix =
            " (kS = " + fmt6(rates.singlet) + ", kT = " + fmt6(rates.triplet) + ")";
        if (!config.operator_family_set || config.operator_family == "haberkorn")
            out.push_back({"haberkorn" + suffix, haberkorn_superop(rates)});
        if (!config.operator_family_set || config.operator_family == "measurement")
            out.push_back({"measurement" + suffix, measurement_superop(rates)});
    } else {
        out.push_back({config.kind + " kinetic superoperator",
                       build_generic(make_scheme(config))});
    }
    if (has_hamiltonian(config))
        out.push_back({"hamiltonian superoperator i[H, .]",
                       hamiltonian_superop(config.hamiltonian)});
    return out;
}

} // namespace

int cmd_operators(const RunConfig& config) {
    const auto operators = assemble_operators(config);
    for (const auto& op : operators) {
        std::cout << op.name << ", " << op.matrix.rows() << " x " << op.matrix.cols() << ":\n";
        print_matrix_aligned(std::cout, op.matrix);
        std::cout << "\n";
    }
    if (!config.out_path.empty()) {
        nlohmann::json doc;
        doc["scheme_kind"] = config.kind;
        doc["operators"] = nlohmann::json::array();
        for (const auto& op : operators)
            doc["operators"].push_back({{"name", op.name},
                                        {"dimension", op.matrix.rows()},
                                        {"entries_re_im", matrix_as_json(op.matrix)}});
        OutputTarget target(config.out_path);
        target.stream() << doc.dump(2) << "\n";
        target.finish();
    }
    return 0;
}

int cmd_simulate(const RunConfig& config) {
    check_operator_family(config);
    const auto scheme = make_scheme(config);
    const auto times = make_time_grid(config);
    const PureSpinState psi(config.c_s, config.c_t);

    Trajectory traj;
    if (config.kind == "single" && config.operator_family == "measurement") {
        Matrix v = measurement_superop(single_site_rates(config));
        if (has_hamiltonian(config)) v += hamiltonian_superop(config.hamiltonian);
        traj = propagate(v, stack_sites({psi.density()}), times, {single_site_rates(config)});
    } else {
        traj = propagate_scheme(scheme, psi, times, config.hamiltonian);
    }

    OutputTarget target(config.out_path);
    auto& out = target.stream();
    out << "t,rho_SS,re_rho_ST,im_rho_ST,rho_TT,purity,yield_S,yield_T\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const auto& s = traj.states[i];
        out << fmt17(traj.times[i]) << ',' << fmt17(s(0, 0).real()) << ','
            << fmt17(s(0, 1).real()) << ',' << fmt17(s(0, 1).imag()) << ','
            << fmt17(s(1, 1).real()) << ',' << fmt17(traj.purity[i]) << ','
            << fmt17(traj.product_singlet[i]) << ',' << fmt17(traj.product_triplet[i]) << "\n";
    }
    target.finish();
    return 0;
}

int cmd_limits(const RunConfig& config) {
    LimitCheckOptions options;
    options.separation = config.factor;
    if (config.tol < 0.0) throw std::invalid_argument("tol must be non-negative");
    options.rate_tol = config.tol;

    std::vector<LimitCaseResult> results;
    if (config.only_case.empty()) {
        results = verify_limits(options);
    } else {
        if (config.only_case.size() != 1 || config.only_case[0] < 'a' ||
            config.only_case[0] > 'e')
            throw std::invalid_argument("case must be one of a, b, c, d, e");
        results.push_back(verify_limit_case(config.only_case[0], options));
    }

    std::cout << "limiting-case checks (separation factor " << fmt6(config.factor) << ")\n";
    std::cout << "case  result  predicted     fitted        rel_err     detail\n";
    int passed = 0;
    for (const auto& r : results) {
        char line[256];
        std::snprintf(line, sizeof line, "%c     %s    %-13.6g %-13.6g %-11.3e %s\n", r.id,
                      r.passed ? "PASS" : "FAIL", r.predicted, r.fitted, r.rel_err,
                      r.detail.c_str());
        std::cout << line;
        std::cout << "      " << r.description << "\n";
        if (!r.element_rates_fitted.empty()) {
            std::cout << "      element rates (SS, ST, TS, TT): fitted";
            for (double v : r.element_rates_fitted) std::cout << ' ' << fmt6(v);
            std::cout << " | predicted";
            for (double v : r.element_rates_predicted) std::cout << ' ' << fmt6(v);
            std::cout << "\n";
        }
        if (r.passed) ++passed;
    }
    std::cout << "overall: " << passed << "/" << results.size() << " passed\n";

    OutputTarget target(config.out_path);
    auto& out = target.stream();
    if (config.out_path.empty()) out << "\n";
    out << "case,predicted,fitted,rel_err,pass\n";
    for (const auto& r : results)
        out << r.id << ',' << fmt17(r.predicted) << ',' << fmt17(r.fitted) << ','
            << fmt17(r.rel_err) << ',' << (r.passed ? "pass" : "fail") << "\n";
    target.finish();

    return passed == static_cast<int>(results.size()) ? 0 : 2;
}

int cmd_scan(const RunConfig& config) {
    if (config.scan_points < 1) throw std::invalid_argument("scan: points must be at least 1");
    if (!(config.ratio_min > 0.0) || !(config.ratio_max > 0.0) ||
        config.ratio_min > config.ratio_max)
        throw std::invalid_argument("scan: need 0 < ratio_min <= ratio_max");

    std::vector<double> grid;
    if (config.scan_points == 1) {
        grid.push_back(config.ratio_min);
    } else {
        const double log_begin = std::log(config.ratio_min);
        const double log_end = std::log(config.ratio_max);
        for (int i = 0; i < config.scan_points; ++i)
            grid.push_back(std::exp(log_begin + (log_end - log_begin) * static_cast<double>(i) /
                                                    (config.scan_points - 1)));
    }

    const auto table = crossover_scan(grid, config.scan_k12, config.scan_k21);

    OutputTarget target(config.out_path);
    auto& out = target.stream();
    out << "ratio,dephasing_ratio\n";
    for (const auto& point : table)
        out << fmt17(point.ratio) << ',' << fmt17(point.dephasing) << "\n";
    target.finish();
    return 0;
}

} // namespace radpair::cli
