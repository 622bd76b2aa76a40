#ifndef CXDYN_DYNAMICS_HPP
#define CXDYN_DYNAMICS_HPP

#include "cxdyn/funcspace.hpp"
#include "cxdyn/qmetric.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace cxdyn {

/// f -> alpha * f. Iterates form a group: psi_a . psi_b = psi_{a b}, psi_a^-1 = psi_{1/a}.
class ScalingMap {
public:
    explicit ScalingMap(double alpha);

    double alpha() const { return alpha_; }

    ComplexityFunction operator()(const ComplexityFunction& f) const;

    /// psi_alpha^k as a single map with factor alpha^k; throws OverflowError.
    ScalingMap power(int k) const;

    ScalingMap then(const ScalingMap& next) const { return ScalingMap(alpha_ * next.alpha_); }

private:
    double alpha_;
};

/// alpha * f as a product node; throws InvalidParameter unless alpha > 0.
ComplexityFunction scale(const ComplexityFunction& f, double alpha);

/**
 * psi_alpha^k(f) = alpha^k * f, built with one multiplication by alpha^k.
 * k = 0 returns f unchanged. Throws OverflowError when alpha^k is not a
 * normal double.
 */
ComplexityFunction iterate(const ComplexityFunction& f, double alpha, int k);

/// |dc(alpha f, alpha g) - dc(f, g) / alpha| on the raw series sums.
double lipschitz_residual(const ComplexityFunction& f, const ComplexityFunction& g, double alpha,
                          int N = kDefaultTruncation);

struct OrbitRow {
    int k;
    double d_fg;
    double d_gf;
    double d_sym;
    /// alpha^-k * dc(f, g) from the scaling identity; may exceed 1. Absent for translation orbits.
    std::optional<double> theoretical_fg;
};

struct OrbitTrace {
    std::vector<OrbitRow> rows; ///< ordered by k
    double alpha;
    int truncation_N;
};

/// Distances between psi^k(f) and psi^k(g) for k_min <= k <= k_max.
OrbitTrace orbit_trace(const ComplexityFunction& f, const ComplexityFunction& g, double alpha, int k_min,
                       int k_max, int N = kDefaultTruncation);

enum class WitnessDirection { ForwardDc, Conjugate, Symmetrized };

std::string_view to_string(WitnessDirection d);

struct SeparationResult {
    bool found = false;
    std::optional<int> at_iterate;
    std::optional<WitnessDirection> witness_direction;
    std::optional<double> distance; ///< the distance that exceeded delta
    std::optional<int> predicted_iterate;
};

/**
 * Scans k = 0, +1, -1, +2, -2, ..., +-M and returns the first iterate at which
 * dc, its conjugate or the symmetrisation (checked in that order) exceeds delta.
 * Throws InputsIndistinguishable if dc_sym(f, g) = 0 at horizon N.
 */
SeparationResult check_expansive(const ComplexityFunction& f, const ComplexityFunction& g, double alpha,
                                 double delta, int M, int N = kDefaultTruncation);

/// Same scan, restricted to the symmetrised distance.
SeparationResult check_expansive_symmetrized(const ComplexityFunction& f, const ComplexityFunction& g,
                                             double alpha, double delta, int M, int N = kDefaultTruncation);

/**
 * Least k >= 0 with alpha^k * d > delta, i.e. max(ceil(log_alpha(delta / d)), 0)
 * with exact ties pushed to the next integer.
 */
int separation_iterate(double d, double alpha, double delta);

/// f + c, c > 0.
ComplexityFunction translate(const ComplexityFunction& f, double c);

/// dc between f + k c and g + k c for k = 0..k_max.
OrbitTrace translation_orbit(const ComplexityFunction& f, const ComplexityFunction& g, double c, int k_max,
                             int N = kDefaultTruncation);

} // namespace cxdyn

#endif
