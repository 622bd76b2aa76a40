#ifndef CXDYN_REPRODUCE_HPP
#define CXDYN_REPRODUCE_HPP

#include "cxdyn/qmetric.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cxdyn {

/// One recomputed reference value.
struct ReproduceRow {
    int criterion;        ///< acceptance criterion the row belongs to
    std::string id;
    std::string description;
    std::string expected;
    std::string computed;
    std::string tolerance;
    bool pass;
};

struct ReproduceReport {
    std::vector<ReproduceRow> rows;
    int truncation_N;
    bool all_pass() const;
};

/// Running-time profiles used for whole-corpus checks (all pairs, all triples).
const std::vector<std::string_view>& reference_corpus();

/// Recomputes every reference value at truncation N; a row that throws is a FAIL.
ReproduceReport reproduce(int N = kDefaultTruncation);

} // namespace cxdyn

#endif
