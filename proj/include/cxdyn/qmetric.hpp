#ifndef CXDYN_QMETRIC_HPP
#define CXDYN_QMETRIC_HPP

#include "cxdyn/funcspace.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace cxdyn {

/// Terms summed by default: the omitted tail is far below double resolution.
inline constexpr int kDefaultTruncation = 80;

/**
 * A truncated complexity distance.
 *
 * `value` is the series sum clamped to [0, 1]; `series_sum` is the raw sum, which
 * can exceed 1 when reciprocals exceed 1 (e.g. deep backward scaling iterates).
 * `error_bound` is 2^-truncation_N.
 */
struct DistanceResult {
    double value = 0;
    double series_sum = 0;
    int truncation_N = kDefaultTruncation;
    double error_bound = 0;
    bool zero_by_dominance = false;
};

/**
 * Complexity quasi-metric
 *
 *     d(f, g) = sum_{n=1}^{N} 2^-n max{0, 1/g(n) - 1/f(n)}
 *
 * summed in increasing n. Moving from a faster f to a slower g costs nothing.
 * A term is 0 whenever f(n) <= g(n), so `zero_by_dominance` coincides with
 * `dominates(f, g, N)`.
 */
DistanceResult dc(const ComplexityFunction& f, const ComplexityFunction& g, int N = kDefaultTruncation);

/// The reversed distance: dc(g, f).
DistanceResult dc_conjugate(const ComplexityFunction& f, const ComplexityFunction& g,
                            int N = kDefaultTruncation);

/// max{dc(f, g), dc(g, f)}; a genuine metric.
DistanceResult dc_sym(const ComplexityFunction& f, const ComplexityFunction& g, int N = kDefaultTruncation);

struct PartialSum {
    int n;
    double sum;
};

/// Running sums S_1..S_up_to of the dc series (unclamped).
std::vector<PartialSum> partial_sums(const ComplexityFunction& f, const ComplexityFunction& g, int up_to);

/// Function pairs (f, g) whose infinite dc series has a known closed form.
enum class OraclePair {
    QuadVsLin,    ///< dc(n^2, n)   = ln 2 - Li2(1/2)
    DoubleVsLin,  ///< dc(2n, n)    = ln(2) / 2
    ConstVsRecip, ///< dc(1, 1/n)   = 1
    SuccVsLin,    ///< dc(n + 1, n) = 1 - ln 2
};

/// Accepts QUAD_VS_LIN, DOUBLE_VS_LIN, CONST_VS_RECIP, SUCC_VS_LIN; throws UnknownPair.
OraclePair parse_oracle_pair(std::string_view id);
std::string_view oracle_pair_name(OraclePair pair);

/// Expression texts of (f, g) for the pair.
std::pair<std::string_view, std::string_view> oracle_functions(OraclePair pair);

/// Li2(1/2) = pi^2/12 - (ln 2)^2 / 2.
double dilog_half();

/// Exact infinite-series value from analytic constants, independent of the summation.
double closed_form_oracle(OraclePair pair);

} // namespace cxdyn

#endif
