#include "cxdyn/classes.hpp"

#include "cxdyn/dynamics.hpp"
#include "cxdyn/error.hpp"

#include <cmath>
#include <sstream>

namespace cxdyn {

std::string_view to_string(Certificate c) {
    switch (c) {
    case Certificate::DcWithinDelta: return "DC_WITHIN_DELTA";
    case Certificate::Dominance: return "DOMINANCE";
    case Certificate::DistanceExceeds: return "DISTANCE_EXCEEDS";
    case Certificate::ViolationAtN: return "VIOLATION_AT_N";
    }
    return "?";
}

MembershipVerdict stable_membership(const ComplexityFunction& f, const ComplexityFunction& g, double alpha,
                                    double delta, int M, int N) {
    if (!(alpha > 1)) {
        throw InvalidParameter("stable membership requires alpha > 1");
    }
    if (!(delta >= 0)) {
        throw InvalidParameter("delta must be >= 0");
    }
    if (M < 0) {
        throw InvalidParameter("scan bound M must be >= 0");
    }

    bool scan_member = true;
    double exceeding = 0;
    for (int k = 0; k <= M; ++k) {
        const double d = dc(iterate(f, alpha, k), iterate(g, alpha, k), N).value;
        if (d > delta) {
            scan_member = false;
            exceeding = d;
            break;
        }
    }

    const DistanceResult base = dc(f, g, N);
    const bool closed_form_member = base.value <= delta;
    if (scan_member != closed_form_member && std::fabs(base.value - delta) >= kStableBoundaryTolerance) {
        std::ostringstream msg;
        msg << "stable-set scan says " << (scan_member ? "member" : "non-member")
            << " but dc(f,g)=" << base.value << " vs delta=" << delta;
        throw InconsistentCriteria(msg.str());
    }

    if (!scan_member) {
        return {false, Certificate::DistanceExceeds, exceeding, delta, N};
    }
    if (base.zero_by_dominance) {
        return {true, Certificate::Dominance, 0.0, delta, N};
    }
    return {true, Certificate::DcWithinDelta, base.value, delta, N};
}

MembershipVerdict unstable_membership(const ComplexityFunction& f, const ComplexityFunction& g, int horizon) {
    const DominanceVerdict v = dominates(g, f, horizon);
    if (v.dominates_over_horizon) {
        return {true, Certificate::Dominance, 0.0, std::nullopt, horizon};
    }
    return {false, Certificate::ViolationAtN, static_cast<double>(*v.first_violation), std::nullopt, horizon};
}

ContainmentReport containment_check(const ComplexityFunction& f, const std::vector<ComplexityFunction>& candidates,
                                    double alpha, double delta, int horizon) {
    ContainmentReport report{{}, true};
    for (const auto& g : candidates) {
        ContainmentRow row{g.source(), stable_membership(f, g, alpha, delta, kDefaultStableScan, horizon),
                           unstable_membership(f, g, horizon)};
        if (row.unstable.member && !row.stable.member) {
            report.holds = false;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace cxdyn
