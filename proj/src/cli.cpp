#include "cxdyn/cli.hpp"

#include "cxdyn/classes.hpp"
#include "cxdyn/dynamics.hpp"
#include "cxdyn/entropy.hpp"
#include "cxdyn/error.hpp"
#include "cxdyn/hierarchy.hpp"
#include "cxdyn/qmetric.hpp"
#include "cxdyn/reproduce.hpp"
#include "cxdyn/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace cxdyn::cli {

namespace {

using nlohmann::json;

enum class Format { Json, Csv, Table };

struct RunConfig {
    std::string command;
    std::vector<std::string> f_exprs;
    std::string g_expr;
    double alpha = 2.0;
    double delta = 0.1;
    double epsilon = 0.1;
    std::optional<double> d;
    int N = kDefaultTruncation;
    int M = 50;
    int k_min = 0;
    int k_max = 5;
    int n_max = 16;
    std::string variant = "two-sided";
    std::string method = "greedy";
    std::string format = "table";
    std::string out_path;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Report {
    json result;
    std::string csv;
    std::string table;
    bool ok = true;
};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

ComplexityFunction require_f(const RunConfig& c) {
    if (c.f_exprs.empty()) {
        throw UsageError(c.command + " requires -f EXPR");
    }
    return parse_function(c.f_exprs.front());
}

ComplexityFunction require_g(const RunConfig& c) {
    if (c.g_expr.empty()) {
        throw UsageError(c.command + " requires -g EXPR");
    }
    return parse_function(c.g_expr);
}

std::string key_value_csv(const json& flat) {
    std::string header;
    std::string row;
    bool first = true;
    for (const auto& [k, v] : flat.items()) {
        const std::string sep = first ? "" : ",";
        header += sep + k;
        row += sep + (v.is_null() ? std::string() : v.is_string() ? v.get<std::string>() : v.dump());
        first = false;
    }
    return header + "\n" + row + "\n";
}

std::string key_value_table(const json& flat) {
    std::ostringstream os;
    for (const auto& [k, v] : flat.items()) {
        os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return os.str();
}

std::string separation_table(const SeparationResult& r) {
    std::ostringstream os;
    if (r.found) {
        os << "found at k=" << *r.at_iterate << " (" << to_string(*r.witness_direction)
           << ", distance " << num(*r.distance) << ")\n";
    } else {
        os << "not found\n";
    }
    if (r.predicted_iterate) {
        os << "predicted iterate: " << *r.predicted_iterate << "\n";
    }
    return os.str();
}

std::string orbit_table(const OrbitTrace& t) {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%6s %14s %14s %14s %16s\n", "k", "d_fg", "d_gf", "d_sym", "theoretical_fg");
    os << line;
    for (const auto& r : t.rows) {
        std::snprintf(line, sizeof line, "%6d %14.6f %14.6f %14.6f %16s\n", r.k, r.d_fg, r.d_gf, r.d_sym,
                      r.theoretical_fg ? num(*r.theoretical_fg).c_str() : "");
        os << line;
    }
    return os.str();
}

Report cmd_dist(const RunConfig& c) {
    const auto r = dc(require_f(c), require_g(c), c.N);
    Report rep{r, to_csv(r), ""};
    rep.table = "value: " + num(r.value) + "\nerror_bound: 2^-" + std::to_string(r.truncation_N) + " (" +
                num(r.error_bound) + ")\ntruncation_N: " + std::to_string(r.truncation_N) +
                "\nzero_by_dominance: " + (r.zero_by_dominance ? "true" : "false") + "\n";
    return rep;
}

Report cmd_orbit(const RunConfig& c) {
    const auto t = orbit_trace(require_f(c), require_g(c), c.alpha, c.k_min, c.k_max, c.N);
    return {t, to_csv(t), orbit_table(t)};
}

Report cmd_expansive(const RunConfig& c) {
    const auto r = check_expansive(require_f(c), require_g(c), c.alpha, c.delta, c.M, c.N);
    const json j = r;
    return {j, key_value_csv(j), separation_table(r)};
}

Report cmd_stable(const RunConfig& c) {
    const auto v = stable_membership(require_f(c), require_g(c), c.alpha, c.delta, c.M, c.N);
    const json j = v;
    return {j, key_value_csv(j), key_value_table(j)};
}

Report cmd_unstable(const RunConfig& c) {
    const auto v = unstable_membership(require_f(c), require_g(c), c.N);
    const json j = v;
    return {j, key_value_csv(j), key_value_table(j)};
}

Report cmd_separation(const RunConfig& c) {
    const double d = c.d ? *c.d : dc(require_f(c), require_g(c), c.N).value;
    const int k = separation_iterate(d, c.alpha, c.delta);
    const json j = {{"d", d}, {"alpha", c.alpha}, {"delta", c.delta}, {"iterate", k}};
    return {j, key_value_csv(j), key_value_table(j)};
}

Report cmd_hierarchy(const RunConfig& c) {
    const auto f = require_f(c);
    const auto g = require_g(c);
    const auto gap = gap_check(f, g);
    const auto sep = hierarchy_separation(f, g, c.alpha, c.delta, c.M, c.N);
    Report rep{json{{"gap", gap}, {"separation", sep}}, to_csv(gap), ""};
    std::ostringstream os;
    os << "gap verdict: " << to_string(gap.verdict) << "\n";
    const auto& last = gap.samples.back();
    os << "final ratio: " << num(last.ratio) << " at n=" << num(last.n) << " (log ratio " << num(last.log_ratio)
       << ")\n";
    os << "separation (d^s): " << separation_table(sep);
    rep.table = os.str();
    return rep;
}

Report cmd_entropy(const RunConfig& c) {
    std::vector<ComplexityFunction> K;
    for (const auto& e : c.f_exprs) {
        K.push_back(parse_function(e));
    }
    if (!c.g_expr.empty()) {
        K.push_back(parse_function(c.g_expr));
    }
    if (K.empty()) {
        throw UsageError("entropy requires at least one -f EXPR");
    }
    const auto est = entropy_estimate(K, c.alpha, c.epsilon, c.n_max, parse_entropy_variant(c.variant), c.N,
                                      parse_cover_method(c.method));
    std::ostringstream os;
    os << "variant: " << to_string(est.variant) << ", method: " << to_string(est.method) << "\n";
    os << "   n    r\n";
    for (const auto& s : est.spanning_counts) {
        char line[32];
        std::snprintf(line, sizeof line, "%4d %4d\n", s.n, s.r);
        os << line;
    }
    os << "slope (full range): " << num(est.slope) << "\n";
    os << "slope (pre-saturation, n<=" << est.window_end << "): "
       << (est.window_slope ? num(*est.window_slope) : std::string("n/a")) << "\n";
    return {est, spanning_counts_csv(est), os.str()};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    }
    return out + "\"";
}

Report cmd_reproduce(const RunConfig& c) {
    const auto report = reproduce(c.N);
    Report rep;
    rep.ok = report.all_pass();
    json rows = json::array();
    std::string csv = "criterion,id,description,expected,computed,tolerance,status\n";
    std::ostringstream table;
    std::size_t width = 0;
    for (const auto& r : report.rows) {
        width = std::max(width, r.id.size());
    }
    for (const auto& r : report.rows) {
        const char* status = r.pass ? "PASS" : "FAIL";
        rows.push_back({{"criterion", r.criterion}, {"id", r.id}, {"description", r.description},
                        {"expected", r.expected}, {"computed", r.computed}, {"tolerance", r.tolerance},
                        {"status", status}});
        csv += std::to_string(r.criterion) + "," + csv_field(r.id) + "," + csv_field(r.description) + "," +
               csv_field(r.expected) + "," + csv_field(r.computed) + "," + csv_field(r.tolerance) + "," + status + "\n";
        table << "[" << status << "] C" << r.criterion << "  " << r.id << std::string(width - r.id.size() + 2, ' ')
              << "expected " << r.expected << "  computed " << r.computed << "  tol " << r.tolerance << "   "
              << r.description << "\n";
    }
    const auto passed = std::count_if(report.rows.begin(), report.rows.end(), [](const auto& r) { return r.pass; });
    table << passed << "/" << report.rows.size() << " rows pass (N=" << report.truncation_N << ")\n";
    rep.result = {{"rows", rows}, {"all_pass", rep.ok}, {"truncation_N", report.truncation_N}};
    rep.csv = csv;
    rep.table = table.str();
    return rep;
}

json params_json(const RunConfig& c) {
    return {{"f", c.f_exprs},      {"g", c.g_expr},          {"alpha", c.alpha},     {"delta", c.delta},
            {"epsilon", c.epsilon}, {"N", c.N},               {"M", c.M},             {"kmin", c.k_min},
            {"kmax", c.k_max},     {"nmax", c.n_max},        {"variant", c.variant}, {"method", c.method},
            {"d", c.d ? json(*c.d) : json(nullptr)}};
}

Report dispatch(const RunConfig& c) {
    if (c.command == "dist") return cmd_dist(c);
    if (c.command == "orbit") return cmd_orbit(c);
    if (c.command == "expansive") return cmd_expansive(c);
    if (c.command == "stable") return cmd_stable(c);
    if (c.command == "unstable") return cmd_unstable(c);
    if (c.command == "separation") return cmd_separation(c);
    if (c.command == "hierarchy") return cmd_hierarchy(c);
    if (c.command == "entropy") return cmd_entropy(c);
    if (c.command == "reproduce") return cmd_reproduce(c);
    throw UsageError("unknown command " + c.command);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Complexity quasi-metric and scaling dynamics", "cxdyn"};
    app.require_subcommand(1, 1);

    app.add_option("-f,--f", c.f_exprs, "running-time expression (repeat for entropy K)");
    app.add_option("-g,--g", c.g_expr, "second running-time expression");
    app.add_option("--alpha", c.alpha, "scale factor")->capture_default_str();
    app.add_option("--delta", c.delta, "separation / stability threshold")->capture_default_str();
    app.add_option("--epsilon", c.epsilon, "spanning radius")->capture_default_str();
    app.add_option("--d", c.d, "initial distance for `separation` (default dc(f,g))");
    app.add_option("--N", c.N, "series truncation")->capture_default_str();
    app.add_option("--M", c.M, "iterate scan bound")->capture_default_str();
    app.add_option("--kmin", c.k_min, "first orbit iterate")->capture_default_str();
    app.add_option("--kmax", c.k_max, "last orbit iterate")->capture_default_str();
    app.add_option("--nmax", c.n_max, "largest n for spanning numbers")->capture_default_str();
    app.add_option("--variant", c.variant, "entropy variant")
        ->check(CLI::IsMember({"forward", "two-sided"}))
        ->capture_default_str();
    app.add_option("--method", c.method, "spanning-set estimator")
        ->check(CLI::IsMember({"greedy", "exhaustive"}))
        ->capture_default_str();
    app.add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.add_option("--out", c.out_path, "write the report to PATH instead of stdout");

    const std::pair<const char*, const char*> commands[] = {
        {"dist", "complexity distance dc(f, g)"},
        {"orbit", "distances along psi_alpha^k for k in [kmin, kmax]"},
        {"expansive", "first iterate |k| <= M separating f and g beyond delta"},
        {"stable", "membership of g in the delta-stable set of f"},
        {"unstable", "membership of g in the unstable set of f"},
        {"separation", "predicted separation iterate ceil(log_alpha(delta/d))"},
        {"hierarchy", "hierarchy gap check and symmetrised orbit separation"},
        {"entropy", "spanning numbers and growth slope for K = all -f (and -g)"},
        {"reproduce", "recompute every reference value as a PASS/FAIL table"},
    };
    for (const auto& [name, help] : commands) {
        app.add_subcommand(name, help)->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
    c.command = app.get_subcommands().front()->get_name();

    Report rep;
    try {
        rep = dispatch(c);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }

    std::string text;
    if (c.format == "json") {
        text = json{{"command", c.command}, {"params", params_json(c)}, {"result", rep.result}}.dump(2) + "\n";
    } else if (c.format == "csv") {
        text = rep.csv;
    } else {
        text = rep.table;
    }

    if (c.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(c.out_path);
        if (!file) {
            err << "error: cannot write " << c.out_path << "\n";
            return kExitFailure;
        }
        file << text;
    }
    return rep.ok ? kExitOk : kExitFailure;
}

} // namespace cxdyn::cli
