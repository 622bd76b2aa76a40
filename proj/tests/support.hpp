// Shared fixtures for the unit suites: a corpus whose members carry an
// independent closed-form lambda next to their expression text, a reference dc
// written directly from the series definition, and a random expression generator.
#ifndef CXDYN_TESTS_SUPPORT_HPP
#define CXDYN_TESTS_SUPPORT_HPP

#include "cxdyn/funcspace.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace testing {

struct Profile {
    std::string text;
    std::function<double(double)> eval;
};

inline const std::vector<Profile>& corpus() {
    static const std::vector<Profile> c = {
        {"n", [](double n) { return n; }},
        {"n^2", [](double n) { return n * n; }},
        {"n^3", [](double n) { return n * n * n; }},
        {"n+1", [](double n) { return n + 1; }},
        {"2*n", [](double n) { return 2 * n; }},
        {"sqrt(n)", [](double n) { return std::sqrt(n); }},
        {"log(n+1)", [](double n) { return std::log(n + 1); }},
        {"n*log(n+1)", [](double n) { return n * std::log(n + 1); }},
        {"n*log(n+1)^2", [](double n) { return n * std::log(n + 1) * std::log(n + 1); }},
        {"n^1.5", [](double n) { return std::pow(n, 1.5); }},
        {"2^n", [](double n) { return std::exp2(n); }},
        {"1", [](double) { return 1.0; }},
        {"1/n", [](double n) { return 1 / n; }},
        {"n + (-1)^(n+1)", [](double n) { return n + (static_cast<long long>(n) % 2 == 1 ? 1.0 : -1.0); }},
    };
    return c;
}

/// Series definition, term by term, with no shared code path.
inline double reference_dc(const std::function<double(double)>& f, const std::function<double(double)>& g,
                           int N = 80) {
    double s = 0;
    double w = 1;
    for (int n = 1; n <= N; ++n) {
        w /= 2;
        const double gap = 1 / g(n) - 1 / f(n);
        if (gap > 0) {
            s += w * gap;
        }
    }
    return std::min(s, 1.0);
}

/// Random well-formed expression text of bounded depth, exercising every grammar production.
class ExprGen {
public:
    explicit ExprGen(unsigned seed) : rng_(seed) {}

    std::string operator()(int depth) {
        if (depth <= 0 || pick(4) == 0) {
            return leaf();
        }
        switch (pick(9)) {
            case 0: return (*this)(depth - 1) + " + " + (*this)(depth - 1);
            case 1: return (*this)(depth - 1) + " - " + (*this)(depth - 1);
            case 2: return (*this)(depth - 1) + "*" + (*this)(depth - 1);
            case 3: return (*this)(depth - 1) + " / " + (*this)(depth - 1);
            case 4: return "(" + (*this)(depth - 1) + ")^" + leaf();
            case 5: return "-" + (*this)(depth - 1);
            case 6: return std::string(kNames[pick(4)]) + "(" + (*this)(depth - 1) + ")";
            case 7: return "(" + (*this)(depth - 1) + ")!";
            default: return "(" + (*this)(depth - 1) + ")";
        }
    }

private:
    static constexpr const char* kNames[] = {"log", "sqrt", "exp", "fact"};

    int pick(int k) { return std::uniform_int_distribution<int>(0, k - 1)(rng_); }

    std::string leaf() {
        switch (pick(3)) {
            case 0: return "n";
            case 1: return std::to_string(pick(10));
            default: return std::to_string(pick(100)) + "." + std::to_string(pick(100));
        }
    }

    std::mt19937 rng_;
};

inline std::vector<cxdyn::ComplexityFunction> parsed_corpus() {
    std::vector<cxdyn::ComplexityFunction> out;
    for (const auto& p : corpus()) {
        out.push_back(cxdyn::parse_function(p.text));
    }
    return out;
}

} // namespace testing

#endif
