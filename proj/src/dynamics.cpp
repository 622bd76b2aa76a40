#include "cxdyn/dynamics.hpp"

#include "cxdyn/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace cxdyn {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0) || !std::isfinite(alpha)) {
        throw InvalidParameter("scale factor alpha must be a positive finite real");
    }
}

double scale_factor(double alpha, int k) {
    check_alpha(alpha);
    const double factor = std::pow(alpha, k);
    if (!std::isnormal(factor)) {
        throw OverflowError("alpha^k is not representable for alpha=" + std::to_string(alpha) +
                            ", k=" + std::to_string(k));
    }
    return factor;
}

enum Directions : unsigned {
    kForward = 1u,
    kConjugate = 2u,
    kSymmetrized = 4u,
    kAll = kForward | kConjugate | kSymmetrized,
};

SeparationResult scan_separation(const ComplexityFunction& f, const ComplexityFunction& g, double alpha,
                                 double delta, int M, int N, unsigned directions) {
    check_alpha(alpha);
    if (!(delta > 0)) {
        throw InvalidParameter("delta must be > 0");
    }
    if (M < 0) {
        throw InvalidParameter("scan bound M must be >= 0");
    }
    const DistanceResult initial = dc_sym(f, g, N);
    if (initial.value <= 0) {
        throw InputsIndistinguishable("'" + f.source() + "' and '" + g.source() +
                                      "' are indistinguishable at horizon N=" + std::to_string(N));
    }

    SeparationResult out;
    if (alpha != 1) {
        out.predicted_iterate = separation_iterate(initial.value, std::max(alpha, 1 / alpha), delta);
    }

    auto probe = [&](int k) {
        const ComplexityFunction fk = iterate(f, alpha, k);
        const ComplexityFunction gk = iterate(g, alpha, k);
        const double forward = dc(fk, gk, N).value;
        const double conjugate = dc(gk, fk, N).value;
        const double symmetrized = std::max(forward, conjugate);
        std::optional<std::pair<WitnessDirection, double>> hit;
        if ((directions & kForward) && forward > delta) {
            hit = {WitnessDirection::ForwardDc, forward};
        } else if ((directions & kConjugate) && conjugate > delta) {
            hit = {WitnessDirection::Conjugate, conjugate};
        } else if ((directions & kSymmetrized) && symmetrized > delta) {
            hit = {WitnessDirection::Symmetrized, symmetrized};
        }
        if (hit) {
            out.found = true;
            out.at_iterate = k;
            out.witness_direction = hit->first;
            out.distance = hit->second;
        }
        return out.found;
    };

    if (probe(0)) {
        return out;
    }
    for (int m = 1; m <= M; ++m) {
        if (probe(m) || probe(-m)) {
            return out;
        }
    }
    return out;
}

} // namespace

ScalingMap::ScalingMap(double alpha) : alpha_(alpha) {
    check_alpha(alpha);
}

ComplexityFunction ScalingMap::operator()(const ComplexityFunction& f) const {
    return scale(f, alpha_);
}

ScalingMap ScalingMap::power(int k) const {
    return ScalingMap(scale_factor(alpha_, k));
}

ComplexityFunction scale(const ComplexityFunction& f, double alpha) {
    check_alpha(alpha);
    return ComplexityFunction(Expr::binary(BinaryOp::Mul, Expr::number(alpha), f.ast_ptr()));
}

ComplexityFunction iterate(const ComplexityFunction& f, double alpha, int k) {
    const double factor = scale_factor(alpha, k);
    if (k == 0) {
        return f;
    }
    return scale(f, factor);
}

double lipschitz_residual(const ComplexityFunction& f, const ComplexityFunction& g, double alpha, int N) {
    const double scaled = dc(scale(f, alpha), scale(g, alpha), N).series_sum;
    const double base = dc(f, g, N).series_sum;
    return std::fabs(scaled - base / alpha);
}

OrbitTrace orbit_trace(const ComplexityFunction& f, const ComplexityFunction& g, double alpha, int k_min,
                       int k_max, int N) {
    check_alpha(alpha);
    if (k_min > k_max) {
        throw InvalidParameter("orbit range requires k_min <= k_max");
    }
    const double base = dc(f, g, N).series_sum;
    OrbitTrace trace{{}, alpha, N};
    for (int k = k_min; k <= k_max; ++k) {
        const ComplexityFunction fk = iterate(f, alpha, k);
        const ComplexityFunction gk = iterate(g, alpha, k);
        const double fg = dc(fk, gk, N).value;
        const double gf = dc(gk, fk, N).value;
        trace.rows.push_back({k, fg, gf, std::max(fg, gf), base / scale_factor(alpha, k)});
    }
    return trace;
}

std::string_view to_string(WitnessDirection d) {
    switch (d) {
    case WitnessDirection::ForwardDc: return "FORWARD_DC";
    case WitnessDirection::Conjugate: return "CONJUGATE";
    case WitnessDirection::Symmetrized: return "SYMMETRIZED";
    }
    return "?";
}

SeparationResult check_expansive(const ComplexityFunction& f, const ComplexityFunction& g, double alpha,
                                 double delta, int M, int N) {
    return scan_separation(f, g, alpha, delta, M, N, kAll);
}

SeparationResult check_expansive_symmetrized(const ComplexityFunction& f, const ComplexityFunction& g,
                                             double alpha, double delta, int M, int N) {
    return scan_separation(f, g, alpha, delta, M, N, kSymmetrized);
}

int separation_iterate(double d, double alpha, double delta) {
    if (!(d > 0) || !std::isfinite(d)) {
        throw InvalidParameter("separation_iterate requires d > 0");
    }
    if (!(alpha > 1) || !std::isfinite(alpha)) {
        throw InvalidParameter("separation_iterate requires alpha > 1");
    }
    if (!(delta > 0)) {
        throw InvalidParameter("separation_iterate requires delta > 0");
    }
    if (delta <= d) {
        return 0;
    }
    int k = std::max(0, static_cast<int>(std::ceil(std::log(delta / d) / std::log(alpha))));
    // The log quotient can land a hair on either side of an integer.
    while (std::pow(alpha, k) * d <= delta) {
        ++k;
    }
    while (k > 0 && std::pow(alpha, k - 1) * d > delta) {
        --k;
    }
    return k;
}

ComplexityFunction translate(const ComplexityFunction& f, double c) {
    if (!(c > 0) || !std::isfinite(c)) {
        throw InvalidParameter("translation constant c must be > 0");
    }
    return ComplexityFunction(Expr::binary(BinaryOp::Add, f.ast_ptr(), Expr::number(c)));
}

OrbitTrace translation_orbit(const ComplexityFunction& f, const ComplexityFunction& g, double c, int k_max,
                             int N) {
    if (!(c > 0) || !std::isfinite(c)) {
        throw InvalidParameter("translation constant c must be > 0");
    }
    if (k_max < 0) {
        throw InvalidParameter("translation orbit requires k_max >= 0");
    }
    OrbitTrace trace{{}, 1.0, N};
    for (int k = 0; k <= k_max; ++k) {
        const ComplexityFunction fk = k == 0 ? f : translate(f, k * c);
        const ComplexityFunction gk = k == 0 ? g : translate(g, k * c);
        const double fg = dc(fk, gk, N).value;
        const double gf = dc(gk, fk, N).value;
        trace.rows.push_back({k, fg, gf, std::max(fg, gf), std::nullopt});
    }
    return trace;
}

} // namespace cxdyn
