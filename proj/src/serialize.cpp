#include "cxdyn/serialize.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace cxdyn {

using nlohmann::json;

namespace {

template<class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

} // namespace

void to_json(json& j, const DistanceResult& r) {
    j = json{{"value", r.value},
             {"truncation_N", r.truncation_N},
             {"error_bound", r.error_bound},
             {"zero_by_dominance", r.zero_by_dominance}};
}

void to_json(json& j, const DominanceVerdict& v) {
    j = json{{"dominates_over_horizon", v.dominates_over_horizon},
             {"first_violation", optional_json(v.first_violation)},
             {"horizon", v.horizon}};
}

void to_json(json& j, const OrbitRow& r) {
    j = json{{"k", r.k},
             {"d_fg", r.d_fg},
             {"d_gf", r.d_gf},
             {"d_sym", r.d_sym},
             {"theoretical_fg", optional_json(r.theoretical_fg)}};
}

void to_json(json& j, const OrbitTrace& t) {
    j = json{{"alpha", t.alpha}, {"truncation_N", t.truncation_N}, {"rows", t.rows}};
}

void to_json(json& j, const SeparationResult& r) {
    j = json{{"found", r.found},
             {"at_iterate", optional_json(r.at_iterate)},
             {"witness_direction", r.witness_direction ? json(to_string(*r.witness_direction)) : json(nullptr)},
             {"distance", optional_json(r.distance)},
             {"predicted_iterate", optional_json(r.predicted_iterate)}};
}

void to_json(json& j, const MembershipVerdict& v) {
    j = json{{"member", v.member},
             {"certificate", to_string(v.certificate)},
             {"value", v.value},
             {"delta", optional_json(v.delta)},
             {"horizon", v.horizon}};
}

void to_json(json& j, const ContainmentReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"candidate", row.candidate}, {"stable", row.stable}, {"unstable", row.unstable}});
    }
    j = json{{"rows", rows}, {"holds", r.holds}};
}

void to_json(json& j, const GapTrace& t) {
    json samples = json::array();
    for (const auto& s : t.samples) {
        samples.push_back({{"n", s.n}, {"ratio", s.ratio}, {"log_ratio", s.log_ratio}});
    }
    j = json{{"verdict", to_string(t.verdict)}, {"samples", samples}};
}

void to_json(json& j, const EntropyEstimate& e) {
    json counts = json::array();
    for (const auto& c : e.spanning_counts) {
        counts.push_back({{"n", c.n}, {"r", c.r}});
    }
    j = json{{"spanning_counts", counts},
             {"slope", e.slope},
             {"window_slope", optional_json(e.window_slope)},
             {"window_end", e.window_end},
             {"epsilon", e.epsilon},
             {"alpha", e.alpha},
             {"variant", to_string(e.variant)},
             {"method", to_string(e.method)}};
}

std::string format_real(double v) {
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string to_csv(const DistanceResult& r) {
    return "value,truncation_N,error_bound,zero_by_dominance\n" + format_real(r.value) + "," +
           std::to_string(r.truncation_N) + "," + format_real(r.error_bound) + "," +
           (r.zero_by_dominance ? "true" : "false") + "\n";
}

std::string to_csv(const OrbitTrace& t) {
    std::string out = "k,d_fg,d_gf,d_sym,theoretical_fg\n";
    for (const auto& r : t.rows) {
        out += std::to_string(r.k) + "," + format_real(r.d_fg) + "," + format_real(r.d_gf) + "," +
               format_real(r.d_sym) + "," + (r.theoretical_fg ? format_real(*r.theoretical_fg) : "") + "\n";
    }
    return out;
}

std::string to_csv(const GapTrace& t) {
    std::string out = "n,ratio\n";
    for (const auto& s : t.samples) {
        out += format_real(s.n) + "," + format_real(s.ratio) + "\n";
    }
    return out;
}

std::string spanning_counts_csv(const EntropyEstimate& e) {
    std::string out = "n,r\n";
    for (const auto& c : e.spanning_counts) {
        out += std::to_string(c.n) + "," + std::to_string(c.r) + "\n";
    }
    return out;
}

} // namespace cxdyn
