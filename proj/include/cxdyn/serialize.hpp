#ifndef CXDYN_SERIALIZE_HPP
#define CXDYN_SERIALIZE_HPP

#include "cxdyn/classes.hpp"
#include "cxdyn/dynamics.hpp"
#include "cxdyn/entropy.hpp"
#include "cxdyn/hierarchy.hpp"
#include "cxdyn/qmetric.hpp"

#include <json.hpp>

#include <string>

namespace cxdyn {

// JSON field names are part of the external interface.

void to_json(nlohmann::json& j, const DistanceResult& r);
void to_json(nlohmann::json& j, const DominanceVerdict& v);
void to_json(nlohmann::json& j, const OrbitRow& r);
void to_json(nlohmann::json& j, const OrbitTrace& t);
void to_json(nlohmann::json& j, const SeparationResult& r);
void to_json(nlohmann::json& j, const MembershipVerdict& v);
void to_json(nlohmann::json& j, const ContainmentReport& r);
void to_json(nlohmann::json& j, const GapTrace& t);
void to_json(nlohmann::json& j, const EntropyEstimate& e);

/// Shortest round-trip decimal text.
std::string format_real(double v);

std::string to_csv(const DistanceResult& r);
/// `k,d_fg,d_gf,d_sym,theoretical_fg`; theoretical_fg is empty when absent.
std::string to_csv(const OrbitTrace& t);
/// `n,ratio`
std::string to_csv(const GapTrace& t);
/// `n,r`
std::string spanning_counts_csv(const EntropyEstimate& e);

} // namespace cxdyn

#endif
