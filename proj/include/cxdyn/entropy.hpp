#ifndef CXDYN_ENTROPY_HPP
#define CXDYN_ENTROPY_HPP

#include "cxdyn/funcspace.hpp"
#include "cxdyn/qmetric.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace cxdyn {

/**
 * Which iterates enter the Bowen metric d_n.
 *
 * Forward uses j = 0..n-1, as in the spanning-set definition; for alpha > 1 it
 * collapses to the j = 0 distance. TwoSided uses j = -(n-1)..n-1, which is what
 * makes backward expansion visible.
 */
enum class EntropyVariant { Forward, TwoSided };

enum class CoverMethod {
    Greedy,     ///< input order; an upper bound on the minimum
    Exhaustive, ///< exact minimum, |K| <= kMaxExhaustive
};

inline constexpr std::size_t kMaxExhaustive = 12;

std::string_view to_string(EntropyVariant v);
EntropyVariant parse_entropy_variant(std::string_view text);
std::string_view to_string(CoverMethod m);
CoverMethod parse_cover_method(std::string_view text);

/// d_n(f, g): max of dc_sym over the variant's iterate window (each term clamped to 1).
double iterated_metric(const ComplexityFunction& f, const ComplexityFunction& g, double alpha, int n,
                       EntropyVariant variant, int N = kDefaultTruncation);

/// r(n, eps): size of a cover of K by open d_n-balls of radius eps centred in K.
int spanning_number(const std::vector<ComplexityFunction>& K, int n, double epsilon, double alpha,
                    EntropyVariant variant, int N = kDefaultTruncation, CoverMethod method = CoverMethod::Greedy);

/// Same, from a precomputed symmetric distance matrix.
int spanning_number_from_matrix(const std::vector<std::vector<double>>& distances, double epsilon,
                                CoverMethod method);

struct SpanningCount {
    int n;
    int r;
};

struct EntropyEstimate {
    std::vector<SpanningCount> spanning_counts; ///< n = 1..n_max
    double slope;                               ///< least-squares slope of ln r over the full range
    /// Slope over n strictly before r first reaches its final value; absent if fewer than 2 points.
    std::optional<double> window_slope;
    int window_end;                             ///< last n of that window (0 if empty)
    double epsilon;
    double alpha;
    EntropyVariant variant;
    CoverMethod method;
};

EntropyEstimate entropy_estimate(const std::vector<ComplexityFunction>& K, double alpha, double epsilon, int n_max,
                                 EntropyVariant variant, int N = kDefaultTruncation,
                                 CoverMethod method = CoverMethod::Greedy);

/// Least-squares slope of ln r against n; exactly 0 for constant r.
double log_growth_slope(const std::vector<SpanningCount>& counts);

} // namespace cxdyn

#endif
