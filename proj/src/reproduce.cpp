#include "cxdyn/reproduce.hpp"

#include "cxdyn/classes.hpp"
#include "cxdyn/dynamics.hpp"
#include "cxdyn/entropy.hpp"
#include "cxdyn/error.hpp"
#include "cxdyn/hierarchy.hpp"
#include "cxdyn/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

namespace cxdyn {

namespace {

constexpr double kQuotedThreeDecimalTol = 2e-3; // values quoted to three decimals
constexpr double kContractionTol = 1e-3;
constexpr double kPartialTol = 5e-4;
constexpr double kQuotedTol = 1e-6; // six-decimal constants, truncated not rounded

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

ComplexityFunction fn(std::string_view text) {
    return parse_function(text);
}

class Builder {
public:
    explicit Builder(ReproduceReport& report) : report_(report) {}

    void real(int criterion, std::string id, std::string description, double expected, double tol,
              const std::function<double()>& compute) {
        ReproduceRow row{criterion, std::move(id), std::move(description), fixed(expected, 6), "", sci(tol), false};
        run(row, [&] {
            const double got = compute();
            row.computed = fixed(got, 6);
            row.pass = std::fabs(got - expected) <= tol;
        });
    }

    void integer(int criterion, std::string id, std::string description, long long expected,
                 const std::function<long long()> &compute) {
        ReproduceRow row{criterion, std::move(id), std::move(description), std::to_string(expected), "", "exact",
                         false};
        run(row, [&] {
            const long long got = compute();
            row.computed = std::to_string(got);
            row.pass = got == expected;
        });
    }

    void text(int criterion, std::string id, std::string description, std::string expected,
              const std::function<std::string()>& compute) {
        ReproduceRow row{criterion, std::move(id), std::move(description), std::move(expected), "", "exact", false};
        run(row, [&] {
            row.computed = compute();
            row.pass = row.computed == row.expected;
        });
    }

private:
    template<class F>
    void run(ReproduceRow& row, F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            row.computed = std::string("error: ") + e.what();
            row.pass = false;
        }
        report_.rows.push_back(std::move(row));
    }

    ReproduceReport& report_;
};

std::string separation_text(const SeparationResult& r) {
    if (!r.found) {
        return "not found";
    }
    return "found at k=" + std::to_string(*r.at_iterate);
}

// Every distinct pair separates within the predicted iterate + 1 for alpha in {2, 1/2},
// and never beyond its initial distance for alpha = 1.
std::string dichotomy_over_corpus(int N) {
    std::vector<ComplexityFunction> corpus;
    for (auto e : reference_corpus()) {
        corpus.push_back(fn(e));
    }
    const double delta = 0.5;
    int pairs = 0;
    for (std::size_t a = 0; a < corpus.size(); ++a) {
        for (std::size_t b = a + 1; b < corpus.size(); ++b) {
            const double d = dc_sym(corpus[a], corpus[b], N).value;
            if (d <= 0) {
                continue;
            }
            ++pairs;
            for (double alpha : {2.0, 0.5}) {
                const auto r = check_expansive(corpus[a], corpus[b], alpha, delta, 200, N);
                const int bound = separation_iterate(d, std::max(alpha, 1 / alpha), delta) + 1;
                if (!r.found || std::abs(*r.at_iterate) > bound) {
                    return "pair (" + corpus[a].source() + ", " + corpus[b].source() + ") alpha=" +
                           format_real(alpha) + " not separated within " + std::to_string(bound);
                }
            }
            const auto still = check_expansive(corpus[a], corpus[b], 1.0, d + 0.05, 50, N);
            if (still.found) {
                return "pair (" + corpus[a].source() + ", " + corpus[b].source() + ") separated at alpha=1";
            }
        }
    }
    return "ok over " + std::to_string(pairs) + " pairs";
}

} // namespace

bool ReproduceReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const ReproduceRow& r) { return r.pass; });
}

const std::vector<std::string_view>& reference_corpus() {
    static const std::vector<std::string_view> corpus = {
        "n",          "n^2",          "n^3",          "n+1",         "2*n",
        "sqrt(n)",    "log(n+1)",     "n*log(n+1)",   "n*log(n+1)^2", "n^1.5",
        "2^n",        "1",            "1/n",          "n + (-1)^(n+1)",
    };
    return corpus;
}

ReproduceReport reproduce(int N) {
    ReproduceReport report{{}, N};
    Builder t(report);

    const double closed_tol = std::ldexp(1.0, -kDefaultTruncation) + 1e-12;
    const std::pair<OraclePair, double> quoted[] = {
        {OraclePair::QuadVsLin, 0.110906},
        {OraclePair::DoubleVsLin, 0.346574},
        {OraclePair::ConstVsRecip, 1.0},
        {OraclePair::SuccVsLin, 0.306853},
    };
    for (const auto& [pair, value] : quoted) {
        const auto [f, g] = oracle_functions(pair);
        const std::string name(oracle_pair_name(pair));
        t.real(1, "closed." + name, "series dc(" + std::string(f) + ", " + std::string(g) + ") vs closed form",
               closed_form_oracle(pair), closed_tol, [&] { return dc(fn(f), fn(g), N).value; });
        t.real(1, "oracle." + name, "closed form " + name + " vs quoted constant", value, kQuotedTol,
               [&] { return closed_form_oracle(pair); });
    }

    struct DistanceCase {
        const char* id;
        const char* f;
        const char* g;
        double expected;
        enum { Forward, Conjugate, Sym } kind;
    };
    const DistanceCase distances[] = {
        {"dist.quad_lin", "n^2", "n", 0.111, DistanceCase::Forward},
        {"dist.succ_lin", "n+1", "n", 0.307, DistanceCase::Forward},
        {"dist.double_lin", "2*n", "n", 0.347, DistanceCase::Forward},
        {"dist.lin_log", "n", "log(n+1)", 0.417, DistanceCase::Forward},
        {"dist.lin_sqrt", "n", "sqrt(n)", 0.113, DistanceCase::Forward},
        {"dist.cube_quad", "n^3", "n^2", 0.045, DistanceCase::Forward},
        {"dist.incomparable", "n + (-1)^(n+1)", "n", 0.262, DistanceCase::Forward},
        {"dist.incomparable_conj", "n + (-1)^(n+1)", "n", 0.131, DistanceCase::Conjugate},
        {"dist.incomparable_sym", "n + (-1)^(n+1)", "n", 0.262, DistanceCase::Sym},
        {"dist.hier_sym", "n", "n*log(n+1)^2", 0.541, DistanceCase::Sym},
        {"dist.const_recip", "1", "1/n", 1.0, DistanceCase::Forward},
    };
    for (const auto& c : distances) {
        const char* label = c.kind == DistanceCase::Forward ? "dc" : c.kind == DistanceCase::Conjugate ? "dc^t" : "dc^s";
        t.real(2, c.id, std::string(label) + "(" + c.f + ", " + c.g + ")", c.expected, kQuotedThreeDecimalTol, [&] {
            const auto f = fn(c.f);
            const auto g = fn(c.g);
            switch (c.kind) {
            case DistanceCase::Forward: return dc(f, g, N).value;
            case DistanceCase::Conjugate: return dc_conjugate(f, g, N).value;
            case DistanceCase::Sym: return dc_sym(f, g, N).value;
            }
            return 0.0;
        });
    }

    const std::pair<int, double> sums[] = {{2, 0.0625}, {3, 0.0903}, {4, 0.1020}, {5, 0.1070}};
    for (const auto& [n, expected] : sums) {
        const double tol = n == 2 ? 0.0 : kPartialTol;
        t.real(3, "partial.S" + std::to_string(n), "partial sum S" + std::to_string(n) + " of dc(n^2, n)", expected,
               tol, [&, n = n] { return partial_sums(fn("n^2"), fn("n"), n).back().sum; });
    }

    t.real(5, "lip.alpha3", "dc(3n^2, 3n) = dc(n^2, n) / 3", 0.037, kContractionTol,
           [&] { return dc(scale(fn("n^2"), 3), scale(fn("n"), 3), N).value; });

    t.integer(6, "sep.alpha2", "separation iterate d=dc(n^2,n), alpha=2, delta=0.5", 3,
              [&] { return separation_iterate(dc(fn("n^2"), fn("n"), N).value, 2.0, 0.5); });
    t.integer(6, "sep.alpha1.01", "separation iterate d=dc(n+1,n), alpha=1.01, delta=0.5", 50,
              [&] { return separation_iterate(dc(fn("n+1"), fn("n"), N).value, 1.01, 0.5); });
    t.text(6, "expansive.alpha2", "expansive scan (n, n+1), alpha=2, delta=0.5", "found at k=-1",
           [&] { return separation_text(check_expansive(fn("n"), fn("n+1"), 2.0, 0.5, 10, N)); });
    t.real(6, "expansive.alpha2.distance", "separating distance of (n, n+1) at k=-1", 0.614, kQuotedThreeDecimalTol,
           [&] { return check_expansive(fn("n"), fn("n+1"), 2.0, 0.5, 10, N).distance.value_or(-1); });
    t.text(6, "expansive.alpha1", "expansive scan (n, n^2), alpha=1, delta=0.2", "not found",
           [&] { return separation_text(check_expansive(fn("n"), fn("n^2"), 1.0, 0.2, 50, N)); });
    t.text(6, "expansive.corpus", "dichotomy alpha in {2,1/2} vs 1 over corpus pairs", "ok over 91 pairs",
           [&] { return dichotomy_over_corpus(N); });

    const double forward_seq[] = {0.045, 0.023, 0.011, 0.006};
    const double backward_seq[] = {0.111, 0.333, 0.999, 1.000};
    for (int k = 0; k < 4; ++k) {
        t.real(7, "contract.k" + std::to_string(k), "dc(psi_2^k n^3, psi_2^k n^2), k=" + std::to_string(k),
               forward_seq[k], kContractionTol,
               [&, k] { return orbit_trace(fn("n^3"), fn("n^2"), 2.0, k, k, N).rows.front().d_fg; });
    }
    for (int k = 0; k < 4; ++k) {
        t.real(7, "backward.k" + std::to_string(k), "dc(psi_3^-k n^2, psi_3^-k n) capped, k=" + std::to_string(k),
               backward_seq[k], kQuotedThreeDecimalTol,
               [&, k] { return orbit_trace(fn("n^2"), fn("n"), 3.0, -k, -k, N).rows.front().d_fg; });
    }

    t.text(8, "stable.sqrt.0.1", "sqrt(n) in S(n, 0.1)", "false",
           [&] { return stable_membership(fn("n"), fn("sqrt(n)"), 2.0, 0.1, 10, N).member ? "true" : "false"; });
    t.text(8, "stable.sqrt.0.2", "sqrt(n) in S(n, 0.2)", "true",
           [&] { return stable_membership(fn("n"), fn("sqrt(n)"), 2.0, 0.2, 10, N).member ? "true" : "false"; });
    t.text(8, "stable.double", "2n in S(n, 0.1)", "true",
           [&] { return stable_membership(fn("n"), fn("2*n"), 2.0, 0.1, 10, N).member ? "true" : "false"; });
    t.text(8, "unstable.succ", "n+1 in U(n)", "false",
           [&] { return unstable_membership(fn("n"), fn("n+1"), N).member ? "true" : "false"; });
    t.text(8, "unstable.lin", "n in U(n^2)", "true",
           [&] { return unstable_membership(fn("n^2"), fn("n"), N).member ? "true" : "false"; });
    t.text(8, "unstable.exp", "2^n in U(n^2)", "false",
           [&] { return unstable_membership(fn("n^2"), fn("2^n"), N).member ? "true" : "false"; });

    const struct {
        const char* id;
        const char* f;
        const char* g;
        GapVerdict expected;
    } gaps[] = {
        {"gap.nlog2", "n", "n*log(n+1)^2", GapVerdict::Holds},
        {"gap.poly_exp", "n^2", "2^n", GapVerdict::Holds},
        {"gap.loglog", "n*log(n)", "n*log(n)*log(log(n))", GapVerdict::Fails},
    };
    for (const auto& c : gaps) {
        t.text(9, c.id, std::string("gap check (") + c.f + ", " + c.g + ")", std::string(to_string(c.expected)),
               [&] { return std::string(to_string(gap_check(fn(c.f), fn(c.g)).verdict)); });
    }
    t.text(9, "hier.sep.iterate", "hierarchy separation (n, n log^2(n+1)), alpha=2, delta=0.05", "found at k=0",
           [&] { return separation_text(hierarchy_separation(fn("n"), fn("n*log(n+1)^2"), 2.0, 0.05, 60, N)); });
    t.real(9, "hier.sep.distance", "d^s at the separating iterate", 0.541, kQuotedThreeDecimalTol, [&] {
        return hierarchy_separation(fn("n"), fn("n*log(n+1)^2"), 2.0, 0.05, 60, N).distance.value_or(-1);
    });

    t.integer(10, "entropy.singleton", "max r(n, 0.1) over n=1..8 for K={n}", 1, [&] {
        const auto est = entropy_estimate({fn("n")}, 2.0, 0.1, 8, EntropyVariant::TwoSided, N);
        int r = 0;
        for (const auto& c : est.spanning_counts) {
            r = std::max(r, c.r);
        }
        return r;
    });

    return report;
}

} // namespace cxdyn
