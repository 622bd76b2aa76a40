#include "cxdyn/qmetric.hpp"

#include "cxdyn/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace cxdyn {

namespace {

void check_truncation(int N) {
    if (N < 1) {
        throw InvalidParameter("truncation N must be >= 1, got " + std::to_string(N));
    }
}

// 2^-n * max{0, 1/g(n) - 1/f(n)}, with 0 whenever f(n) <= g(n).
double series_term(const ComplexityFunction& f, const ComplexityFunction& g, int n) {
    const double fv = evaluate(f, n);
    const double gv = evaluate(g, n);
    if (fv <= gv) {
        return 0.0;
    }
    const double gap = (std::isinf(gv) ? 0.0 : 1.0 / gv) - (std::isinf(fv) ? 0.0 : 1.0 / fv);
    return gap > 0 ? std::ldexp(gap, -n) : 0.0;
}

} // namespace

DistanceResult dc(const ComplexityFunction& f, const ComplexityFunction& g, int N) {
    check_truncation(N);
    double sum = 0;
    bool all_zero = true;
    for (int n = 1; n <= N; ++n) {
        const double term = series_term(f, g, n);
        if (term > 0) {
            all_zero = false;
            sum += term;
        }
    }
    DistanceResult out;
    out.series_sum = sum;
    out.value = std::clamp(sum, 0.0, 1.0);
    out.truncation_N = N;
    out.error_bound = std::ldexp(1.0, -N);
    out.zero_by_dominance = all_zero;
    return out;
}

DistanceResult dc_conjugate(const ComplexityFunction& f, const ComplexityFunction& g, int N) {
    return dc(g, f, N);
}

DistanceResult dc_sym(const ComplexityFunction& f, const ComplexityFunction& g, int N) {
    const DistanceResult fg = dc(f, g, N);
    const DistanceResult gf = dc(g, f, N);
    DistanceResult out = fg;
    out.value = std::max(fg.value, gf.value);
    out.series_sum = std::max(fg.series_sum, gf.series_sum);
    out.zero_by_dominance = fg.zero_by_dominance && gf.zero_by_dominance;
    return out;
}

std::vector<PartialSum> partial_sums(const ComplexityFunction& f, const ComplexityFunction& g, int up_to) {
    check_truncation(up_to);
    std::vector<PartialSum> out;
    out.reserve(static_cast<std::size_t>(up_to));
    double sum = 0;
    for (int n = 1; n <= up_to; ++n) {
        sum += series_term(f, g, n);
        out.push_back({n, sum});
    }
    return out;
}

OraclePair parse_oracle_pair(std::string_view id) {
    for (auto p : {OraclePair::QuadVsLin, OraclePair::DoubleVsLin, OraclePair::ConstVsRecip,
                   OraclePair::SuccVsLin}) {
        if (id == oracle_pair_name(p)) {
            return p;
        }
    }
    throw UnknownPair("unknown oracle pair '" + std::string(id) + "'");
}

std::string_view oracle_pair_name(OraclePair pair) {
    switch (pair) {
    case OraclePair::QuadVsLin: return "QUAD_VS_LIN";
    case OraclePair::DoubleVsLin: return "DOUBLE_VS_LIN";
    case OraclePair::ConstVsRecip: return "CONST_VS_RECIP";
    case OraclePair::SuccVsLin: return "SUCC_VS_LIN";
    }
    throw UnknownPair("unknown oracle pair");
}

std::pair<std::string_view, std::string_view> oracle_functions(OraclePair pair) {
    switch (pair) {
    case OraclePair::QuadVsLin: return {"n^2", "n"};
    case OraclePair::DoubleVsLin: return {"2*n", "n"};
    case OraclePair::ConstVsRecip: return {"1", "1/n"};
    case OraclePair::SuccVsLin: return {"n+1", "n"};
    }
    throw UnknownPair("unknown oracle pair");
}

double dilog_half() {
    constexpr double pi = std::numbers::pi;
    constexpr double ln2 = std::numbers::ln2;
    return pi * pi / 12.0 - ln2 * ln2 / 2.0;
}

double closed_form_oracle(OraclePair pair) {
    constexpr double ln2 = std::numbers::ln2;
    switch (pair) {
    // sum 2^-n (1/n - 1/n^2) = -ln(1/2) - Li2(1/2)
    case OraclePair::QuadVsLin: return ln2 - dilog_half();
    // sum 2^-n / (2n) = ln(2) / 2
    case OraclePair::DoubleVsLin: return ln2 / 2.0;
    // sum_{n>=2} 2^-n (n - 1) = 1
    case OraclePair::ConstVsRecip: return 1.0;
    // sum 2^-n (1/n - 1/(n+1)) = ln 2 - (2 ln 2 - 1)
    case OraclePair::SuccVsLin: return 1.0 - ln2;
    }
    throw UnknownPair("unknown oracle pair");
}

} // namespace cxdyn
