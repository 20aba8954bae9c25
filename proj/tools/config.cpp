#include "config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace radpair::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::string strip_quotes(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\'')))
        return s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream stream(s);
    std::string item;
    while (std::getline(stream, item, sep)) parts.push_back(trim(item));
    return parts;
}

double parse_double(const std::string& text) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw std::runtime_error("expected a number, got '" + text + "'");
    }
    if (consumed != text.size())
        throw std::runtime_error("trailing characters after number in '" + text + "'");
    return value;
}

int parse_int(const std::string& text) {
    std::size_t consumed = 0;
    int value = 0;
    try {
        value = std::stoi(text, &consumed);
    } catch (const std::exception&) {
        throw std::runtime_error("expected an integer, got '" + text + "'");
    }
    if (consumed != text.size())
        throw std::runtime_error("trailing characters after integer in '" + text + "'");
    return value;
}

// section -> set of keys accepted there
const std::map<std::string, std::set<std::string>> known_keys = {
    {"scheme",
     {"kind", "operator", "kS", "kT", "kS1", "kS2", "kT2", "kT3", "k12", "k21", "k13", "k31",
      "site_kS", "site_kT", "exchange"}},
    {"initial", {"c_S", "c_T", "site_distribution"}},
    {"hamiltonian", {"H00", "H01", "H10", "H11"}},
    {"grid", {"start", "stop", "points", "spacing"}},
    {"output", {"path"}},
    {"limits", {"factor", "tol", "case"}},
    {"scan", {"ratio_min", "ratio_max", "points", "k12", "k21"}},
};

struct RawEntry {
    std::string value;
    int line = 0;
};

} // namespace

Complex parse_complex(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.empty() || parts.size() > 2)
        throw std::runtime_error("expected 're,im' pair, got '" + text + "'");
    const double re = parse_double(parts[0]);
    const double im = parts.size() == 2 ? parse_double(parts[1]) : 0.0;
    return {re, im};
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    for (const auto& part : split(text, ',')) values.push_back(parse_double(part));
    return values;
}

std::vector<RunConfig::ExchangeEntry> parse_exchange_list(const std::string& text) {
    std::vector<RunConfig::ExchangeEntry> entries;
    for (const auto& part : split(text, ',')) {
        if (part.empty()) continue;
        const auto arrow = part.find("->");
        const auto colon = part.find(':', arrow == std::string::npos ? 0 : arrow);
        if (arrow == std::string::npos || colon == std::string::npos)
            throw std::runtime_error("expected 'i->j:rate', got '" + part + "'");
        RunConfig::ExchangeEntry entry;
        entry.from = parse_int(trim(part.substr(0, arrow)));
        entry.to = parse_int(trim(part.substr(arrow + 2, colon - arrow - 2)));
        entry.rate = parse_double(trim(part.substr(colon + 1)));
        entries.push_back(entry);
    }
    if (entries.empty()) throw std::runtime_error("empty exchange list");
    return entries;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open config file");

    std::map<std::string, RawEntry> raw;
    std::string section;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#' || text[0] == ';') continue;
        if (text.front() == '[') {
            if (text.back() != ']')
                throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                         ": malformed section header");
            section = trim(text.substr(1, text.size() - 2));
            if (known_keys.find(section) == known_keys.end())
                throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                         ": unknown section [" + section + "]");
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 'key = value'");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = strip_quotes(trim(text.substr(eq + 1)));
        if (section.empty())
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": key '" + key + "' outside any [section]");
        if (known_keys.at(section).find(key) == known_keys.at(section).end())
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": unknown key '" +
                                     key + "' in [" + section + "]");
        raw[section + "." + key] = {value, line_no};
    }

    RunConfig config;
    const auto take = [&](const std::string& full_key, auto&& parse_into) {
        const auto it = raw.find(full_key);
        if (it == raw.end()) return;
        try {
            parse_into(it->second.value);
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(it->second.line) + ": " +
                                     full_key + ": " + e.what());
        }
    };

    take("scheme.kind", [&](const std::string& v) { config.kind = v; });
    take("scheme.operator", [&](const std::string& v) {
        config.operator_family = v;
        config.operator_family_set = true;
    });
    take("scheme.kS", [&](const std::string& v) { config.k_s = parse_double(v); });
    take("scheme.kT", [&](const std::string& v) { config.k_t = parse_double(v); });
    take("scheme.kS1", [&](const std::string& v) { config.k_s1 = parse_double(v); });
    take("scheme.kS2", [&](const std::string& v) { config.k_s2 = parse_double(v); });
    take("scheme.kT2", [&](const std::string& v) { config.k_t2 = parse_double(v); });
    take("scheme.kT3", [&](const std::string& v) { config.k_t3 = parse_double(v); });
    take("scheme.k12", [&](const std::string& v) { config.k12 = parse_double(v); });
    take("scheme.k21", [&](const std::string& v) { config.k21 = parse_double(v); });
    take("scheme.k13", [&](const std::string& v) { config.k13 = parse_double(v); });
    take("scheme.k31", [&](const std::string& v) { config.k31 = parse_double(v); });
    take("scheme.site_kS", [&](const std::string& v) { config.site_k_s = parse_double_list(v); });
    take("scheme.site_kT", [&](const std::string& v) { config.site_k_t = parse_double_list(v); });
    take("scheme.exchange",
         [&](const std::string& v) { config.exchange = parse_exchange_list(v); });

    take("initial.c_S", [&](const std::string& v) { config.c_s = parse_complex(v); });
    take("initial.c_T", [&](const std::string& v) { config.c_t = parse_complex(v); });
    take("initial.site_distribution",
         [&](const std::string& v) { config.site_distribution = parse_double_list(v); });

    const auto set_h = [&](int row, int col) {
        return [&config, row, col](const std::string& v) {
            config.hamiltonian(row, col) = parse_complex(v);
        };
    };
    take("hamiltonian.H00", set_h(0, 0));
    take("hamiltonian.H01", set_h(0, 1));
    take("hamiltonian.H10", set_h(1, 0));
    take("hamiltonian.H11", set_h(1, 1));

    take("grid.start", [&](const std::string& v) { config.grid_start = parse_double(v); });
    take("grid.stop", [&](const std::string& v) { config.grid_stop = parse_double(v); });
    take("grid.points", [&](const std::string& v) { config.grid_points = parse_int(v); });
    take("grid.spacing", [&](const std::string& v) { config.grid_spacing = v; });

    take("output.path", [&](const std::string& v) { config.out_path = v; });

    take("limits.factor", [&](const std::string& v) { config.factor = parse_double(v); });
    take("limits.tol", [&](const std::string& v) { config.tol = parse_double(v); });
    take("limits.case", [&](const std::string& v) { config.only_case = v; });

    take("scan.ratio_min", [&](const std::string& v) { config.ratio_min = parse_double(v); });
    take("scan.ratio_max", [&](const std::string& v) { config.ratio_max = parse_double(v); });
    take("scan.points", [&](const std::string& v) { config.scan_points = parse_int(v); });
    take("scan.k12", [&](const std::string& v) { config.scan_k12 = parse_double(v); });
    take("scan.k21", [&](const std::string& v) { config.scan_k21 = parse_double(v); });

    return config;
}

KineticScheme make_scheme(const RunConfig& config) {
    KineticScheme scheme;
    if (config.kind == "single") {
        scheme = KineticScheme::single_site({config.k_s, config.k_t});
    } else if (config.kind == "two_site") {
        scheme = KineticScheme::two_site(config.k_s1, config.k_s2, config.k12, config.k21);
    } else if (config.kind == "common_intermediate") {
        scheme =
            KineticScheme::common_intermediate(config.k12, config.k21, config.k_s2, config.k_t2);
    } else if (config.kind == "three_site") {
        scheme = KineticScheme::three_site(config.k12, config.k21, config.k13, config.k31,
                                           config.k_s2, config.k_t3);
    } else if (config.kind == "generic") {
        const auto n = config.site_k_s.size();
        if (n == 0)
            throw std::invalid_argument("generic scheme: site_kS must list at least one site");
        std::vector<double> k_t = config.site_k_t;
        if (k_t.empty()) k_t.assign(n, 0.0);
        if (k_t.size() != n)
            throw std::invalid_argument("generic scheme: site_kS and site_kT lengths differ");
        for (std::size_t i = 0; i < n; ++i)
            scheme.sites.push_back({"R" + std::to_string(i + 1),
                                    {config.site_k_s[i], k_t[i]}});
        scheme.exchange = RealMatrix::Zero(static_cast<Eigen::Index>(n),
                                           static_cast<Eigen::Index>(n));
        for (const auto& entry : config.exchange) {
            if (entry.from < 1 || entry.to < 1 || entry.from > static_cast<int>(n) ||
                entry.to > static_cast<int>(n) || entry.from == entry.to)
                throw std::invalid_argument("generic scheme: exchange entry must connect two "
                                            "distinct sites in 1.." + std::to_string(n));
            scheme.exchange(entry.from - 1, entry.to - 1) = entry.rate;
        }
        scheme.initial_distribution = RealVector::Zero(static_cast<Eigen::Index>(n));
        scheme.initial_distribution(0) = 1.0;
    } else {
        throw std::invalid_argument("unknown scheme kind '" + config.kind + "'");
    }

    if (!config.site_distribution.empty()) {
        if (static_cast<int>(config.site_distribution.size()) != scheme.num_sites())
            throw std::invalid_argument("site_distribution must have one entry per site");
        for (int i = 0; i < scheme.num_sites(); ++i)
            scheme.initial_distribution(i) = config.site_distribution[static_cast<std::size_t>(i)];
    }
    scheme.validate();
    return scheme;
}

std::vector<double> make_time_grid(const RunConfig& config) {
    if (config.grid_points < 2) throw std::invalid_argument("grid: points must be at least 2");
    if (!std::isfinite(config.grid_start) || !std::isfinite(config.grid_stop) ||
        config.grid_start >= config.grid_stop)
        throw std::invalid_argument("grid: need finite start < stop");

    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(config.grid_points));
    if (config.grid_spacing == "linear") {
        for (int i = 0; i < config.grid_points; ++i)
            times.push_back(config.grid_start + (config.grid_stop - config.grid_start) *
                                                    static_cast<double>(i) /
                                                    (config.grid_points - 1));
    } else if (config.grid_spacing == "log") {
        if (config.grid_start <= 0.0)
            throw std::invalid_argument("grid: log spacing requires start > 0");
        const double log_begin = std::log(config.grid_start);
        const double log_end = std::log(config.grid_stop);
        for (int i = 0; i < config.grid_points; ++i)
            times.push_back(std::exp(log_begin + (log_end - log_begin) * static_cast<double>(i) /
                                                     (config.grid_points - 1)));
    } else {
        throw std::invalid_argument("grid: spacing must be 'linear' or 'log'");
    }
    return times;
}

} // namespace radpair::cli
