#include "cxdyn/hierarchy.hpp"

#include "cxdyn/error.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace cxdyn {

namespace {

// log of f ln f / g at x, or nullopt when f <= 1 or either function is undefined there.
std::optional<double> log_gap_ratio(const ComplexityFunction& f, const ComplexityFunction& g, double x,
                                    std::string& why) {
    try {
        const double log_f = log_value(f, x);
        if (!(log_f > 0)) {
            why = "'" + f.source() + "' must exceed 1 at sampled points";
            return std::nullopt;
        }
        return log_f + std::log(log_f) - log_value(g, x);
    } catch (const DomainError& e) {
        why = e.what();
        return std::nullopt;
    }
}

} // namespace

std::string_view to_string(GapVerdict v) {
    switch (v) {
    case GapVerdict::Holds: return "GAP_HOLDS";
    case GapVerdict::Fails: return "GAP_FAILS";
    case GapVerdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

GapTrace gap_check(const ComplexityFunction& f, const ComplexityFunction& g, int n_points, const GapRule& rule) {
    if (n_points < 4) {
        throw InvalidParameter("gap_check needs n_points >= 4");
    }
    if (rule.tail < 2) {
        throw InvalidParameter("gap rule tail must be >= 2");
    }

    GapTrace trace{{}, GapVerdict::Inconclusive};
    for (int i = 1; i <= n_points; ++i) {
        const double x = std::ldexp(1.0, i);
        std::string why;
        const auto lr = log_gap_ratio(f, g, x, why);
        if (!lr) {
            if (trace.samples.empty()) {
                continue;
            }
            throw DomainError(why);
        }
        trace.samples.push_back({x, std::exp(*lr), *lr});
    }
    if (trace.samples.size() < static_cast<std::size_t>(rule.tail)) {
        throw DomainError("gap_check: fewer than " + std::to_string(rule.tail) + " usable sample points");
    }

    const auto tail_begin = trace.samples.end() - rule.tail;
    bool strictly_decreasing = true;
    bool non_decreasing = true;
    for (auto it = tail_begin + 1; it != trace.samples.end(); ++it) {
        strictly_decreasing = strictly_decreasing && it->log_ratio < (it - 1)->log_ratio;
        non_decreasing = non_decreasing && it->log_ratio >= (it - 1)->log_ratio;
    }
    const bool bounded_below = std::all_of(tail_begin, trace.samples.end(),
                                           [&](const GapSample& s) { return s.ratio >= rule.fails_floor; });

    if (strictly_decreasing && trace.samples.back().ratio < rule.holds_below) {
        trace.verdict = GapVerdict::Holds;
    } else if (non_decreasing || bounded_below) {
        trace.verdict = GapVerdict::Fails;
    }
    return trace;
}

SeparationResult hierarchy_separation(const ComplexityFunction& f, const ComplexityFunction& g, double alpha,
                                      double delta, int M, int N) {
    if (!(alpha > 1)) {
        throw InvalidParameter("hierarchy separation requires alpha > 1");
    }
    return check_expansive_symmetrized(f, g, alpha, delta, M, N);
}

} // namespace cxdyn
