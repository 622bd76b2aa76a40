#ifndef CXDYN_HIERARCHY_HPP
#define CXDYN_HIERARCHY_HPP

#include "cxdyn/dynamics.hpp"
#include "cxdyn/funcspace.hpp"

#include <string_view>
#include <vector>

namespace cxdyn {

/// Enough geometric samples (n up to 2^256) for polylog gaps to cross the 0.01 threshold.
inline constexpr int kDefaultGapPoints = 256;

/**
 * Heuristic decision rule for f log f = o(g) from finitely many samples.
 * Little-o cannot be decided numerically; INCONCLUSIVE is a normal outcome.
 */
struct GapRule {
    int tail = 5;               ///< samples inspected at the end of the trace
    double holds_below = 0.01;  ///< final ratio must be below this for GAP_HOLDS
    double fails_floor = 0.1;   ///< tail bounded below by this means GAP_FAILS
};

enum class GapVerdict { Holds, Fails, Inconclusive };

std::string_view to_string(GapVerdict v);

struct GapSample {
    double n;
    double ratio;     ///< f(n) ln f(n) / g(n), may underflow to 0
    double log_ratio; ///< its logarithm, always finite
};

struct GapTrace {
    std::vector<GapSample> samples;
    GapVerdict verdict;
};

/**
 * Samples r(n) = f(n) ln f(n) / g(n) at n = 2^i, i = 1..n_points, in log space.
 *
 * GAP_HOLDS: log r strictly decreasing over the last `tail` samples and the final
 * ratio below `holds_below`. GAP_FAILS: the tail is non-decreasing or every tail
 * ratio is at least `fails_floor`. Otherwise INCONCLUSIVE.
 *
 * Leading points where f <= 1 or g is not positive are skipped; a failure after the
 * first usable point throws DomainError.
 */
GapTrace gap_check(const ComplexityFunction& f, const ComplexityFunction& g, int n_points = kDefaultGapPoints,
                   const GapRule& rule = {});

/// Orbit separation in the symmetrised distance, alpha > 1.
SeparationResult hierarchy_separation(const ComplexityFunction& f, const ComplexityFunction& g, double alpha,
                                      double delta, int M, int N = kDefaultTruncation);

} // namespace cxdyn

#endif
