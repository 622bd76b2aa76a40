#ifndef CXDYN_CLASSES_HPP
#define CXDYN_CLASSES_HPP

#include "cxdyn/funcspace.hpp"
#include "cxdyn/qmetric.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace cxdyn {

inline constexpr int kDefaultStableScan = 10;

/// Tolerance band around delta inside which the scan and the closed form may disagree.
inline constexpr double kStableBoundaryTolerance = 1e-10;

enum class Certificate { DcWithinDelta, Dominance, DistanceExceeds, ViolationAtN };

std::string_view to_string(Certificate c);

struct MembershipVerdict {
    bool member;
    Certificate certificate;
    /// Distance for the distance certificates, the violating n for ViolationAtN, 0 for Dominance.
    double value;
    /// Absent for unstable-set verdicts, which do not depend on delta.
    std::optional<double> delta;
    int horizon;
};

/**
 * Membership of g in the delta-stable set of f under psi_alpha (alpha > 1).
 *
 * Runs the forward scan dc(alpha^k f, alpha^k g) <= delta for k = 0..M and checks
 * the result against the closed form dc(f, g) <= delta. A disagreement farther
 * than kStableBoundaryTolerance from delta throws InconsistentCriteria.
 */
MembershipVerdict stable_membership(const ComplexityFunction& f, const ComplexityFunction& g, double alpha,
                                    double delta, int M = kDefaultStableScan, int N = kDefaultTruncation);

/// Membership of g in the unstable set of f: g(n) <= f(n) on 1..horizon.
MembershipVerdict unstable_membership(const ComplexityFunction& f, const ComplexityFunction& g,
                                      int horizon = kDefaultTruncation);

struct ContainmentRow {
    std::string candidate;
    MembershipVerdict stable;
    MembershipVerdict unstable;
};

struct ContainmentReport {
    std::vector<ContainmentRow> rows;
    /// Every unstable member is also a stable member.
    bool holds;
};

ContainmentReport containment_check(const ComplexityFunction& f, const std::vector<ComplexityFunction>& candidates,
                                    double alpha, double delta, int horizon = kDefaultTruncation);

} // namespace cxdyn

#endif
