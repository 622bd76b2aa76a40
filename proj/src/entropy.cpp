#include "cxdyn/entropy.hpp"

#include "cxdyn/dynamics.hpp"
#include "cxdyn/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

namespace cxdyn {

namespace {

using Matrix = std::vector<std::vector<double>>;

void check_entropy_args(double alpha, double epsilon) {
    if (!(alpha > 0)) {
        throw InvalidParameter("alpha must be > 0");
    }
    if (!(epsilon > 0)) {
        throw InvalidParameter("epsilon must be > 0");
    }
}

double sym_at(const ComplexityFunction& f, const ComplexityFunction& g, double alpha, int j, int N) {
    return dc_sym(iterate(f, alpha, j), iterate(g, alpha, j), N).value;
}

// Pairwise d_n, updated in place from d_{n-1} by folding in the iterates new at n.
class IteratedDistances {
public:
    IteratedDistances(const std::vector<ComplexityFunction>& K, double alpha, EntropyVariant variant, int N)
        : K_(K), alpha_(alpha), variant_(variant), N_(N), d_(K.size(), std::vector<double>(K.size(), 0.0)) {}

    const Matrix& advance() {
        const int j = n_;
        ++n_;
        for (std::size_t a = 0; a < K_.size(); ++a) {
            for (std::size_t b = a + 1; b < K_.size(); ++b) {
                double v = std::max(d_[a][b], sym_at(K_[a], K_[b], alpha_, j, N_));
                if (variant_ == EntropyVariant::TwoSided && j > 0) {
                    v = std::max(v, sym_at(K_[a], K_[b], alpha_, -j, N_));
                }
                d_[a][b] = d_[b][a] = v;
            }
        }
        return d_;
    }

private:
    const std::vector<ComplexityFunction>& K_;
    double alpha_;
    EntropyVariant variant_;
    int N_;
    int n_ = 0;
    Matrix d_;
};

int greedy_cover(const Matrix& d, double epsilon) {
    std::vector<std::size_t> reps;
    for (std::size_t p = 0; p < d.size(); ++p) {
        const bool covered = std::any_of(reps.begin(), reps.end(), [&](std::size_t e) { return d[p][e] < epsilon; });
        if (!covered) {
            reps.push_back(p);
        }
    }
    return static_cast<int>(reps.size());
}

int exhaustive_cover(const Matrix& d, double epsilon) {
    const std::size_t m = d.size();
    if (m > kMaxExhaustive) {
        throw InvalidParameter("exhaustive cover supports at most " + std::to_string(kMaxExhaustive) + " functions");
    }
    // ball[p]: representatives that cover p
    std::vector<std::uint32_t> ball(m, 0);
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t e = 0; e < m; ++e) {
            if (d[p][e] < epsilon) {
                ball[p] |= 1u << e;
            }
        }
    }
    int best = static_cast<int>(m);
    const std::uint32_t full = (1u << m) - 1;
    for (std::uint32_t subset = 1; subset <= full; ++subset) {
        const int size = std::popcount(subset);
        if (size >= best) {
            continue;
        }
        const bool spans = std::all_of(ball.begin(), ball.end(), [&](std::uint32_t b) { return (b & subset) != 0; });
        if (spans) {
            best = size;
        }
    }
    return best;
}

} // namespace

std::string_view to_string(EntropyVariant v) {
    return v == EntropyVariant::Forward ? "forward" : "two-sided";
}

EntropyVariant parse_entropy_variant(std::string_view text) {
    if (text == "forward") {
        return EntropyVariant::Forward;
    }
    if (text == "two-sided") {
        return EntropyVariant::TwoSided;
    }
    throw InvalidParameter("variant must be forward or two-sided");
}

std::string_view to_string(CoverMethod m) {
    return m == CoverMethod::Greedy ? "greedy" : "exhaustive";
}

CoverMethod parse_cover_method(std::string_view text) {
    if (text == "greedy") {
        return CoverMethod::Greedy;
    }
    if (text == "exhaustive") {
        return CoverMethod::Exhaustive;
    }
    throw InvalidParameter("cover method must be greedy or exhaustive");
}

double iterated_metric(const ComplexityFunction& f, const ComplexityFunction& g, double alpha, int n,
                       EntropyVariant variant, int N) {
    check_entropy_args(alpha, 1.0);
    if (n < 1) {
        throw InvalidParameter("iterated metric needs n >= 1");
    }
    double out = 0;
    const int j_min = variant == EntropyVariant::TwoSided ? -(n - 1) : 0;
    for (int j = j_min; j < n; ++j) {
        out = std::max(out, sym_at(f, g, alpha, j, N));
    }
    return out;
}

int spanning_number_from_matrix(const Matrix& distances, double epsilon, CoverMethod method) {
    if (distances.empty()) {
        throw InvalidParameter("spanning set needs a non-empty K");
    }
    return method == CoverMethod::Greedy ? greedy_cover(distances, epsilon) : exhaustive_cover(distances, epsilon);
}

int spanning_number(const std::vector<ComplexityFunction>& K, int n, double epsilon, double alpha,
                    EntropyVariant variant, int N, CoverMethod method) {
    check_entropy_args(alpha, epsilon);
    if (K.empty()) {
        throw InvalidParameter("spanning set needs a non-empty K");
    }
    if (n < 1) {
        throw InvalidParameter("spanning number needs n >= 1");
    }
    Matrix d(K.size(), std::vector<double>(K.size(), 0.0));
    for (std::size_t a = 0; a < K.size(); ++a) {
        for (std::size_t b = a + 1; b < K.size(); ++b) {
            d[a][b] = d[b][a] = iterated_metric(K[a], K[b], alpha, n, variant, N);
        }
    }
    return spanning_number_from_matrix(d, epsilon, method);
}

double log_growth_slope(const std::vector<SpanningCount>& counts) {
    if (counts.size() < 2) {
        return 0.0;
    }
    double mean_n = 0;
    for (const auto& c : counts) {
        mean_n += c.n;
    }
    mean_n /= static_cast<double>(counts.size());
    // Centre ln r on its first value so that a constant sequence gives exactly 0.
    const double y0 = std::log(static_cast<double>(counts.front().r));
    double sxy = 0;
    double sxx = 0;
    for (const auto& c : counts) {
        const double dx = c.n - mean_n;
        sxy += dx * (std::log(static_cast<double>(c.r)) - y0);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

EntropyEstimate entropy_estimate(const std::vector<ComplexityFunction>& K, double alpha, double epsilon, int n_max,
                                 EntropyVariant variant, int N, CoverMethod method) {
    check_entropy_args(alpha, epsilon);
    if (K.empty()) {
        throw InvalidParameter("entropy estimate needs a non-empty K");
    }
    if (n_max < 4) {
        throw InvalidParameter("entropy estimate needs n_max >= 4");
    }
    if (method == CoverMethod::Exhaustive && K.size() > kMaxExhaustive) {
        throw InvalidParameter("exhaustive cover supports at most " + std::to_string(kMaxExhaustive) + " functions");
    }

    EntropyEstimate est{{}, 0.0, std::nullopt, 0, epsilon, alpha, variant, method};
    IteratedDistances distances(K, alpha, variant, N);
    for (int n = 1; n <= n_max; ++n) {
        est.spanning_counts.push_back({n, spanning_number_from_matrix(distances.advance(), epsilon, method)});
    }
    est.slope = log_growth_slope(est.spanning_counts);

    const int final_r = est.spanning_counts.back().r;
    const auto saturation = std::find_if(est.spanning_counts.begin(), est.spanning_counts.end(),
                                         [&](const SpanningCount& c) { return c.r == final_r; });
    const std::vector<SpanningCount> window(est.spanning_counts.begin(), saturation);
    est.window_end = window.empty() ? 0 : window.back().n;
    if (window.size() >= 2) {
        est.window_slope = log_growth_slope(window);
    }
    return est;
}

} // namespace cxdyn
