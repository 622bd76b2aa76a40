#include "cxdyn/dynamics.hpp"
#include "cxdyn/error.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace cxdyn;

namespace {

const ComplexityFunction& fn(const char* text) {
    static std::map<std::string, ComplexityFunction> cache;
    auto it = cache.find(text);
    if (it == cache.end()) {
        it = cache.emplace(text, parse_function(text)).first;
    }
    return it->second;
}

} // namespace

TEST_CASE("scaling and iterates") {
    const auto& n = fn("n");
    const auto eight = scale(scale(scale(n, 2), 2), 2);
    const auto direct = iterate(n, 2, 3);
    for (long long k = 1; k <= 20; ++k) {
        CHECK(evaluate(eight, k) == 8.0 * k);
        CHECK(evaluate(direct, k) == 8.0 * k);
        CHECK(evaluate(iterate(n, 2, -1), k) == k / 2.0);
        CHECK(evaluate(scale(n, 1), k) == evaluate(n, k));
        CHECK(evaluate(scale(fn("n^2"), 3), k) == 3.0 * k * k);
    }
    CHECK(structurally_equal(iterate(n, 2, 0).ast(), n.ast()));
    // one multiplication node, not k nested ones
    const auto by128 = iterate(n, 2, 7);
    const auto& node = std::get<ast::Binary>(by128.ast().node());
    CHECK(node.op == BinaryOp::Mul);
    CHECK(std::get<ast::Number>(node.lhs->node()).value == 128);

    CHECK_THROWS_AS(scale(n, 0), InvalidParameter);
    CHECK_THROWS_AS(scale(n, -2), InvalidParameter);
    CHECK_THROWS_AS(iterate(n, 10, 400), OverflowError);
    CHECK_THROWS_AS(iterate(n, 10, -400), OverflowError);
}

TEST_CASE("group law") {
    const auto fs = testing::parsed_corpus();
    for (double alpha : {0.5, 2.0, 3.0}) {
        for (int a = -10; a <= 10; a += 3) {
            for (int b = -10; b <= 10; b += 4) {
                for (const auto& f : {fs[1], fs[5], fs[13]}) {
                    const auto two_step = iterate(iterate(f, alpha, a), alpha, b);
                    const auto one_step = iterate(f, alpha, a + b);
                    for (long long n = 1; n <= 12; ++n) {
                        CHECK(evaluate(two_step, n) ==
                              doctest::Approx(evaluate(one_step, n)).epsilon(1e-14));
                    }
                }
            }
        }
    }
    const ScalingMap psi(2);
    const auto composed = psi.then(ScalingMap(3));
    CHECK(composed.alpha() == 6);
    CHECK(psi.power(-2).alpha() == 0.25);
    CHECK(evaluate(composed(fn("n")), 5) == 30);
    CHECK(evaluate(psi(psi(fn("n"))), 5) == evaluate(psi.power(2)(fn("n")), 5));
    CHECK_THROWS_AS(ScalingMap(0), InvalidParameter);
}

TEST_CASE("Lipschitz identity") {
    CHECK(lipschitz_residual(fn("n^2"), fn("n"), 3) <= 1e-12);
    CHECK(std::abs(dc(scale(fn("n^2"), 3), scale(fn("n"), 3)).value - 0.0370) <= 1e-3);
    CHECK(lipschitz_residual(fn("n"), fn("n"), 3) == 0);

    // independent oracle: series over the scaled lambdas
    const double scaled = testing::reference_dc([](double n) { return 2 * (n + 1); },
                                                [](double n) { return 2 * n; });
    const double base = testing::reference_dc([](double n) { return n + 1; }, [](double n) { return n; });
    CHECK(std::abs(scaled - base / 2) <= 1e-12);
    CHECK(std::abs(dc(scale(fn("n+1"), 2), scale(fn("n"), 2)).value - scaled) <= 1e-12);
    CHECK(std::abs(scaled - 0.1534) <= 1e-3);

    const auto fs = testing::parsed_corpus();
    for (double alpha : {1.0 / 3, 0.5, 2.0, 3.0, 10.0}) {
        for (const auto& f : fs) {
            for (const auto& g : fs) {
                INFO(f.source() << " vs " << g.source() << " alpha=" << alpha);
                CHECK(lipschitz_residual(f, g, alpha) <= 1e-12);
            }
        }
    }
}

TEST_CASE("orbit traces") {
    const auto fwd = orbit_trace(fn("n^3"), fn("n^2"), 2, 0, 3);
    REQUIRE(fwd.rows.size() == 4);
    const double expected[] = {0.045, 0.023, 0.011, 0.006};
    for (int k = 0; k < 4; ++k) {
        CHECK(fwd.rows[k].k == k);
        CHECK(std::abs(fwd.rows[k].d_fg - expected[k]) <= 1e-3);
    }

    const auto back = orbit_trace(fn("n^2"), fn("n"), 3, -3, 0);
    const double capped[] = {1.000, 0.999, 0.333, 0.111}; // k = -3..0
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(back.rows[i].d_fg - capped[i]) <= 2e-3);
    }
    CHECK(back.rows[0].d_fg == 1);
    REQUIRE(back.rows[0].theoretical_fg);
    CHECK(*back.rows[0].theoretical_fg == doctest::Approx(27 * 0.1109066540949328));

    for (const auto& row : orbit_trace(fn("n"), fn("n^2"), 2, -8, 8).rows) {
        CHECK(row.d_fg == 0);
    }

    const auto fs = testing::parsed_corpus();
    for (const auto& f : fs) {
        for (const auto& g : fs) {
            const auto t = orbit_trace(f, g, 2, -4, 6);
            const double d0 = dc(f, g).value;
            for (std::size_t i = 0; i < t.rows.size(); ++i) {
                const auto& r = t.rows[i];
                for (double v : {r.d_fg, r.d_gf, r.d_sym}) {
                    CHECK(v >= 0);
                    CHECK(v <= 1);
                }
                CHECK(r.d_sym == std::max(r.d_fg, r.d_gf));
                if (r.k >= 0 && d0 < 1) {
                    CHECK(std::abs(r.d_fg - std::pow(2.0, -r.k) * d0) <= 1e-10);
                }
                if (i > 0 && r.k > 0) {
                    CHECK(r.d_fg <= t.rows[i - 1].d_fg);
                }
            }
        }
    }
    CHECK_THROWS_AS(orbit_trace(fn("n"), fn("n^2"), 2, 3, 1), InvalidParameter);
}

TEST_CASE("expansive scan") {
    const auto r = check_expansive(fn("n"), fn("n+1"), 2, 0.5, 10);
    REQUIRE(r.found);
    CHECK(*r.at_iterate == -1);
    CHECK(std::abs(*r.distance - 0.614) <= 2e-3);
    CHECK(*r.distance > 0.5);

    // identity dynamics: the forward distance never moves off zero, and nothing exceeds the initial separation
    for (const auto& row : orbit_trace(fn("n"), fn("n^2"), 1, -50, 50).rows) {
        CHECK(row.d_fg == 0);
    }
    CHECK_FALSE(check_expansive(fn("n"), fn("n^2"), 1, 0.2, 50).found);
    // every direction is scanned, so the reversed distance 0.111 already exceeds 0.05 at k = 0
    const auto small = check_expansive(fn("n"), fn("n^2"), 1, 0.05, 50);
    CHECK(small.found);
    CHECK(*small.at_iterate == 0);
    CHECK(*small.witness_direction == WitnessDirection::Conjugate);

    const auto third = check_expansive(fn("n^2"), fn("n^3"), 1.0 / 3, 0.5, 20);
    REQUIRE(third.found);
    CHECK(*third.at_iterate > 0);

    CHECK_THROWS_AS(check_expansive(fn("n"), fn("n"), 2, 0.5, 10), InputsIndistinguishable);
    CHECK_THROWS_AS(check_expansive(fn("n"), fn("n^2"), 2, 0, 10), InvalidParameter);
    CHECK_THROWS_AS(check_expansive(fn("n"), fn("n^2"), 2, 0.5, -1), InvalidParameter);
}

TEST_CASE("expansiveness dichotomy over the corpus") {
    const auto fs = testing::parsed_corpus();
    const double delta = 0.5;
    int pairs = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            const double ds = dc_sym(fs[i], fs[j]).value;
            REQUIRE(ds > 0);
            ++pairs;
            for (double alpha : {0.5, 2.0}) {
                const auto r = check_expansive(fs[i], fs[j], alpha, delta, 200);
                INFO(fs[i].source() << " vs " << fs[j].source() << " alpha=" << alpha);
                REQUIRE(r.found);
                CHECK(*r.distance > delta);
                CHECK(std::abs(*r.at_iterate) <= separation_iterate(ds, std::max(alpha, 1 / alpha), delta) + 1);
            }
            const auto still = check_expansive(fs[i], fs[j], 1, std::min(ds + 0.05, 1.0), 30);
            if (ds + 0.05 <= 1) {
                CHECK_FALSE(still.found);
            }
        }
    }
    CHECK(pairs == 91);
}

TEST_CASE("separation iterate") {
    CHECK(separation_iterate(0.111, 2, 0.5) == 3);
    CHECK(separation_iterate(0.307, 1.01, 0.5) == 50);
    CHECK(separation_iterate(0.5, 2, 0.25) == 0);
    CHECK(separation_iterate(0.5, 2, 0.5) == 0);
    CHECK(separation_iterate(0.125, 2, 0.5) == 3); // 4 * 0.125 = 0.5 is not > 0.5
    CHECK_THROWS_AS(separation_iterate(0, 2, 0.5), InvalidParameter);
    CHECK_THROWS_AS(separation_iterate(0.1, 1, 0.5), InvalidParameter);
    CHECK_THROWS_AS(separation_iterate(0.1, 2, 0), InvalidParameter);

    // sharpness: first k with alpha^k d > delta
    for (double alpha : {1.01, 1.5, 2.0, 3.0, 10.0}) {
        for (double d : {1e-6, 0.003, 0.0451, 0.111, 0.3, 0.49}) {
            for (double delta : {0.05, 0.2, 0.5, 0.9}) {
                const int k = separation_iterate(d, alpha, delta);
                INFO(d << " " << alpha << " " << delta);
                CHECK(std::pow(alpha, k) * d > delta);
                if (k >= 1) {
                    CHECK(std::pow(alpha, k - 1) * d <= delta);
                }
            }
        }
    }
    // matches the backward orbit of an actual pair
    const double d = dc(fn("n^2"), fn("n")).value;
    const int k = separation_iterate(d, 2, 0.5);
    const auto t = orbit_trace(fn("n^2"), fn("n"), 2, -k, 0);
    CHECK(t.rows.front().d_fg > 0.5);
    CHECK(t.rows[1].d_fg <= 0.5);
}

TEST_CASE("translations decay") {
    const auto t = translation_orbit(fn("n^2"), fn("n"), 10, 20);
    REQUIRE(t.rows.size() == 21);
    for (std::size_t k = 0; k + 1 < t.rows.size(); ++k) {
        CHECK(t.rows[k + 1].d_fg < t.rows[k].d_fg);
        CHECK_FALSE(t.rows[k].theoretical_fg);
    }
    CHECK(t.rows.back().d_fg < 0.01);
    for (const auto& row : translation_orbit(fn("n"), fn("n"), 3, 5).rows) {
        CHECK(row.d_fg == 0);
        CHECK(row.d_sym == 0);
    }
    CHECK(evaluate(translate(fn("n"), 2.5), 4) == 6.5);
    CHECK_THROWS_AS(translate(fn("n"), 0), InvalidParameter);
}
