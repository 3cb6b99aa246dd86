#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "rng.hpp"

#include "apollo/coordinates.hpp"
#include "apollo/depth.hpp"
#include "apollo/descartes.hpp"

using namespace apollo;

namespace {

Tricycle<Rational> R(Rational a, Rational b, Rational c) { return {a, b, c}; }

}  // namespace

TEST_SUITE("descartes") {
    TEST_CASE("completions") {
        const auto w = completions(R(2, 2, 3));
        CHECK(w.minus.is_rational());
        CHECK(w.minus.rational_part() == Rational(-1));
        CHECK(w.plus.rational_part() == Rational(15));

        const auto belt = completions(R(-1, 2, 2));
        CHECK(belt.minus.rational_part() == Rational(3));
        CHECK(belt.plus.rational_part() == Rational(3));

        const auto eq = completions(R(1, 1, 1));
        CHECK(eq.minus == QuadValue(3, -2, 3));
        CHECK(eq.plus == QuadValue(3, 2, 3));

        CHECK_THROWS_AS(completions(R(-1, -1, 3)), DomainError);
        const auto f = completions_float<double>({1.0, 1.0, 1.0});
        CHECK(f.minus == doctest::Approx(3.0 - 2.0 * std::sqrt(3.0)));
    }

    TEST_CASE("reflect") {
        const Quadruple<Rational> window{-1, 2, 2, 3};
        CHECK(reflect(window, 0) == Quadruple<Rational>{15, 2, 2, 3});
        CHECK(reflect(reflect(window, 2), 2) == window);
        CHECK(reflect(Quadruple<Rational>{0, 0, 1, 1}, 0) == Quadruple<Rational>{4, 0, 1, 1});
        CHECK_THROWS_AS(reflect(window, 4), UsageError);
    }

    TEST_CASE("Descartes relation") {
        CHECK(descartes_residual(Quadruple<Rational>{-1, 2, 2, 3}) == Rational(0));
        CHECK(satisfies_descartes(Quadruple<double>{-1, 2, 2, 3}));
        CHECK_FALSE(satisfies_descartes(Quadruple<double>{-1, 2, 2, 4}));
    }

    TEST_CASE("property: completions close exactly and sum linearly") {
        testing::RationalGen gen(11);
        for (int i = 0; i < 500; ++i) {
            const Tricycle<Rational> t{gen.in_range(), gen.in_range(), gen.in_range()};
            const auto c = completions(t);
            const Rational D = c.minus.radicand();
            const auto lifted = lift(t, D);
            REQUIRE(satisfies_descartes(Quadruple<QuadValue>{lifted[0], lifted[1], lifted[2], c.minus}));
            REQUIRE(satisfies_descartes(Quadruple<QuadValue>{lifted[0], lifted[1], lifted[2], c.plus}));
            const Rational sum = t[0] + t[1] + t[2];
            REQUIRE(c.minus + c.plus == QuadValue(sum + sum, D));
            // Reflecting one completion gives the other.
            const auto r = reflect(Quadruple<QuadValue>{lifted[0], lifted[1], lifted[2], c.minus}, 3);
            REQUIRE(r[3] == c.plus);
        }
    }
}

TEST_SUITE("depth") {
    TEST_CASE("worked example with trace") {
        const auto r = depth(R(15, 35, 102), {.cap = kDefaultCap, .trace = true});
        REQUIRE(r.finite());
        CHECK(r.steps == 4);
        REQUIRE(r.trace.size() == 4);
        const std::array<Tricycle<Rational>, 4> expected{R(15, 35, 2), R(15, 2, 2), R(3, 2, 2), R(-1, 2, 2)};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK(r.trace[i][j].is_rational());
                CHECK(r.trace[i][j].rational_part() == expected[i][j]);
            }
        CHECK(r.terminal->rational_part() == Rational(-1));
    }

    TEST_CASE("nonpositive entries give depth zero") {
        CHECK(depth(R(0, 1, 1)).steps == 0);
        CHECK(depth(R(0, 1, 1)).finite());
        CHECK(depth(R(-1, 2, 2)).steps == 0);
        CHECK(depth_float<double>({0.0, 1.0, 1.0}).steps == 0);
    }

    TEST_CASE("discontinuity table values") {
        const DepthOptions deep{.cap = 2000};
        CHECK(depth_scaled(Rational(1, 3), Rational(1, 12), deep).steps == 2);
        CHECK(depth_scaled(Rational(1, 3), Rational(1, 12) + Rational(1, 10), deep).steps == 1);
        CHECK(depth_scaled(Rational(1, 3), Rational(1, 12) + Rational(1, 100), deep).steps == 11);
        CHECK(depth_scaled(Rational(1, 3), Rational(1, 12) + Rational(1, 1000), deep).steps == 86);
        const auto r = depth_scaled(Rational(1, 3), Rational(1, 12) + Rational(1, 10000), deep);
        CHECK(r.finite());
        CHECK(r.steps == 836);
    }

    TEST_CASE("default cap truncates long trajectories") {
        const auto r = depth_scaled(Rational(1, 3), Rational(1, 12) + Rational(1, 1000));
        CHECK(r.reached_cap());
        CHECK(r.cap == 21);
        CHECK_THROWS_AS(depth(R(1, 2, 3), {.cap = 0}), UsageError);
    }

    TEST_CASE("scaled depth examples") {
        CHECK(depth_scaled(Rational(9, 16), Rational(1, 16)).steps == 1);
        // Just below the point the depth-4 ellipse E[3,4] is entered.
        CHECK(depth_scaled(Rational(9, 16), Rational(1, 16) - Rational(1, 10000000)).steps == 4);
        CHECK(depth_scaled(Rational(9, 16), Rational(1, 16) + Rational(1, 10000000)).steps == 1);
        CHECK(depth_scaled(Rational(4, 9), Rational(1, 9)).steps == 1);
        CHECK(depth_scaled(Rational(4, 9), Rational(1, 18)).steps == 3);
        CHECK(depth_scaled_float(0.2, 0.2).steps == 2);
        CHECK(depth_scaled_float(0.6, 0.6).steps == 1);
        CHECK(depth_scaled(Rational(1, 5), Rational(1, 5)).steps == 2);
        CHECK(depth_scaled(Rational(3, 5), Rational(3, 5)).steps == 1);
    }

    TEST_CASE("major curvature") {
        CHECK(major_curvature(R(15, 35, 102))->rational_part() == Rational(-1));
        CHECK(*major_curvature(R(1, 1, 1)) == QuadValue(3, -2, 3));
        const auto belt = major_curvature(R(4, 1, 1));
        REQUIRE(belt.has_value());
        CHECK(belt->sign() == 0);
        CHECK(major_curvature_float({15.0, 35.0, 102.0}) == doctest::Approx(-1.0));
        CHECK_FALSE(major_curvature(R(1, Rational(1, 3), Rational(1, 12) + Rational(1, 1000))).has_value());
    }

    TEST_CASE("golden seed") {
        const auto g = golden_seed();
        CHECK(g[0] == doctest::Approx(0.346014).epsilon(1e-6));
        CHECK(g[1] == 1.0);
        CHECK(g[2] == doctest::Approx(2.890054).epsilon(1e-6));
        const auto [mx, my] = golden_moduli_point();
        CHECK(mx == doctest::Approx(0.3460).epsilon(1e-3));
        CHECK(my == doctest::Approx(0.1197).epsilon(1e-3));
        // Input-order reduction lists g[0]/g[2] before g[1]/g[2].
        const auto p = reduce_to_moduli(g);
        CHECK(p.x == doctest::Approx(my));
        CHECK(p.y == doctest::Approx(mx));
    }

    TEST_CASE("golden seed diverges at sufficient precision") {
        // Frozen oracle value: binary64 rounding ends the process at step 34.
        CHECK(depth_float(golden_seed(), {.cap = 100}).steps == 34);
        const auto r100 = depth_float(golden_seed(golden_precision_bits(100)), {.cap = 100});
        CHECK(r100.reached_cap());
        const auto r1000 = depth_float(golden_seed(golden_precision_bits(1000)), {.cap = 1000});
        CHECK(r1000.reached_cap());
        CHECK(r1000.cap == 1000);
    }

    TEST_CASE("float and exact agree on a worked example") {
        const auto f = depth_float<double>({15.0, 35.0, 102.0}, {.trace = true});
        CHECK(f.steps == 4);
        CHECK(f.trace.back()[0] == doctest::Approx(-1.0));
        const auto b = depth_float<BigFloat>({BigFloat(15.0, 128), BigFloat(35.0, 128), BigFloat(102.0, 128)});
        CHECK(b.steps == 4);
    }

    TEST_CASE("property: scale and permutation invariance") {
        testing::RationalGen gen(99);
        for (int i = 0; i < 300; ++i) {
            Tricycle<Rational> t{gen.in_range(), gen.in_range(), gen.in_range()};
            const auto base = depth(t, {.cap = 200});
            const Rational lambda = gen.in_range();
            const auto scaled = depth(R(lambda * t[0], lambda * t[1], lambda * t[2]), {.cap = 200});
            REQUIRE(scaled.kind == base.kind);
            REQUIRE(scaled.steps == base.steps);
            std::sort(t.begin(), t.end());
            do {
                const auto p = depth(t, {.cap = 200});
                REQUIRE(p.kind == base.kind);
                REQUIRE(p.steps == base.steps);
            } while (std::next_permutation(t.begin(), t.end()));
        }
    }

    TEST_CASE("property: replaced maximum strictly exceeds its replacement") {
        testing::RationalGen gen(5);
        for (int i = 0; i < 300; ++i) {
            const Tricycle<Rational> t{gen.in_range(), gen.in_range(), gen.in_range()};
            const auto r = depth(t, {.cap = 300, .trace = true});
            auto prev = lift(t, r.trace.empty() ? Rational(0) : r.trace.front()[0].radicand());
            if (r.trace.empty()) continue;
            for (const auto& next : r.trace) {
                int changed = 0;
                for (std::size_t j = 0; j < 3; ++j) {
                    if (next[j] == prev[j]) continue;
                    ++changed;
                    REQUIRE(quad_compare(prev[j], next[j]) > 0);
                    for (std::size_t k = 0; k < 3; ++k) REQUIRE(quad_compare(prev[j], prev[k]) >= 0);
                }
                REQUIRE(changed <= 1);
                prev = next;
            }
            if (r.finite()) {
                for (std::size_t k = 0; k + 1 < r.trace.size(); ++k)
                    for (const auto& v : r.trace[k]) REQUIRE(v.sign() > 0);
                REQUIRE(r.terminal->sign() <= 0);
            }
        }
    }

    TEST_CASE("property: float and exact modes agree away from zero") {
        testing::RationalGen gen(1234);
        int compared = 0;
        int logged = 0;
        for (int i = 0; i < 1000; ++i) {
            const Tricycle<Rational> t{gen.in_range(), gen.in_range(), gen.in_range()};
            const auto exact = depth(t, {.cap = 200});
            const auto fl = depth_float<double>({t[0].to_double(), t[1].to_double(), t[2].to_double()},
                                                {.cap = 200, .trace = true});
            bool clear = true;
            for (std::size_t k = 0; k + 1 < fl.trace.size(); ++k)
                for (double v : fl.trace[k]) clear = clear && std::abs(v) > 1e-6;
            if (fl.terminal) clear = clear && std::abs(*fl.terminal) > 1e-6;
            if (!clear || exact.reached_cap() || fl.reached_cap()) {
                if (exact.steps != fl.steps) ++logged;
                continue;
            }
            ++compared;
            REQUIRE(exact.steps == fl.steps);
        }
        MESSAGE("float/exact compared " << compared << ", disagreements inside the 1e-6 band: " << logged);
        CHECK(compared > 900);
    }
}

TEST_SUITE("coordinates") {
    TEST_CASE("reduce_to_moduli") {
        CHECK(reduce_to_moduli(R(15, 35, 102)) == Point<Rational>{Rational(5, 34), Rational(35, 102)});
        CHECK(reduce_to_moduli(R(1, 1, 1)) == Point<Rational>{1, 1});
        CHECK(reduce_to_moduli(R(9, 4, 1)) == Point<Rational>{Rational(4, 9), Rational(1, 9)});
        CHECK_THROWS_AS(reduce_to_moduli(R(0, 1, 1)), DomainError);
    }

    TEST_CASE("barycentric") {
        CHECK(barycentric(R(1, 1, 1)) == std::array<Rational, 3>{Rational(1, 3), Rational(1, 3), Rational(1, 3)});
        CHECK(barycentric(R(2, 2, 3)) == std::array<Rational, 3>{Rational(2, 7), Rational(2, 7), Rational(3, 7)});
        CHECK(barycentric(R(1, 0, 0)) == std::array<Rational, 3>{1, 0, 0});
        CHECK_THROWS_AS(barycentric(R(1, -1, 0)), DomainError);
    }

    TEST_CASE("depth is constant along the moduli reduction") {
        const auto m = reduce_to_moduli(R(15, 35, 102));
        CHECK(depth_scaled(m.x, m.y).steps == depth(R(15, 35, 102)).steps);
    }
}
