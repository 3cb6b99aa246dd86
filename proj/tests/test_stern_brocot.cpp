#include <map>
#include <numeric>
#include <set>

#include "doctest.h"

#include "apollo/conic.hpp"
#include "apollo/corona.hpp"
#include "apollo/errors.hpp"
#include "apollo/stern_brocot.hpp"

using namespace apollo;

TEST_SUITE("stern_brocot") {
    TEST_CASE("pairs are validated") {
        CHECK_THROWS_AS(SBPair(0, 0), DomainError);
        CHECK_THROWS_AS(SBPair(2, 4), DomainError);
        CHECK_THROWS_AS(SBPair(-1, 2), DomainError);
        CHECK(SBPair(2, 3).to_string() == "[2,3]");
        CHECK(SBPair(2, 3).squared() == Rational(4, 9));
    }

    TEST_CASE("array rows") {
        const auto rows = sb_array(3);
        REQUIRE(rows.size() == 3);
        CHECK(rows[0] == std::vector<SBPair>{{1, 0}, {0, 1}});
        CHECK(rows[1] == std::vector<SBPair>{{1, 0}, {1, 1}, {0, 1}});
        CHECK(rows[2] == std::vector<SBPair>{{1, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 1}});
    }

    TEST_CASE("property: adjacent array entries are unimodular") {
        for (const auto& row : sb_array(12))
            for (std::size_t i = 0; i + 1 < row.size(); ++i) REQUIRE(unimodular(row[i], row[i + 1]));
    }

    TEST_CASE("Farey and deformed addition") {
        CHECK(farey_add({1, 2}, {1, 1}) == SBPair(2, 3));
        CHECK(farey_add({1, 0}, {0, 1}) == SBPair(1, 1));
        CHECK(farey_add({2, 1}, {1, 1}) == SBPair(3, 2));
        CHECK(deformed_add(SBPair(1, 2), SBPair(2, 3)).squared() == Rational(9, 25));
        CHECK(deformed_add(Rational(1, 4), Rational(4, 9)) == Rational(9, 25));
        CHECK(deformed_add(Rational(0), Rational(1)) == Rational(1, 4));
        CHECK(deformed_add(Rational(1, 4), Rational(1, 9)) == Rational(4, 25));
        CHECK_THROWS_AS(deformed_add(Rational(1, 2), Rational(1, 4)), DomainError);
    }

    TEST_CASE("property: deformed addition on unimodular neighbours") {
        int checked = 0;
        for (std::int64_t m = 1; m <= 40; ++m)
            for (std::int64_t p = 0; p <= m; ++p)
                for (std::int64_t n = 1; m + n <= 40; ++n)
                    for (std::int64_t q = 0; q <= n; ++q) {
                        if (std::gcd(p, m) != 1 || std::gcd(q, n) != 1) continue;
                        const SBPair a(p, m), b(q, n);
                        if (!unimodular(a, b)) continue;
                        const Rational expected((p + q) * (p + q), (m + n) * (m + n));
                        REQUIRE(deformed_add(a, b).squared() == expected);
                        REQUIRE(deformed_add(a.squared(), b.squared()) == expected);
                        ++checked;
                    }
        CHECK(checked > 500);
    }

    TEST_CASE("rows") {
        CHECK(sb_row_of({1, 1}) == 1);
        CHECK(sb_row_of({1, 2}) == 2);
        CHECK(sb_row_of({2, 3}) == 3);
        CHECK(sb_row_of({3, 4}) == 4);
        CHECK(sb_row_of({5, 2}) == 4);
        CHECK_THROWS_AS(sb_row_of({1, 0}), DomainError);
        CHECK_THROWS_AS(sb_row_of({0, 1}), DomainError);
    }

    TEST_CASE("tree nodes and their parents") {
        const auto tree = sb_tree(3);
        REQUIRE(tree.size() == 7);
        for (std::size_t i = 0; i + 1 < tree.size(); ++i) CHECK(tree[i].pair.ratio() < tree[i + 1].pair.ratio());
        for (const auto& node : tree) {
            CHECK(farey_add(node.left, node.right) == node.pair);
            CHECK(unimodular(node.left, node.right));
            CHECK(sb_row_of(node.pair) == node.row);
        }
    }

    TEST_CASE("property: every reduced fraction with p+m <= 12 is in the tree by row p+m") {
        const auto tree = sb_tree(12);
        std::set<std::pair<std::int64_t, std::int64_t>> seen;
        for (const auto& node : tree) REQUIRE(seen.insert({node.pair.p(), node.pair.q()}).second);
        for (std::int64_t p = 1; p < 12; ++p)
            for (std::int64_t m = 1; p + m <= 12; ++m) {
                if (std::gcd(p, m) != 1) continue;
                REQUIRE(seen.count({p, m}) == 1);
                REQUIRE(sb_row_of({p, m}) <= p + m);
            }
        // Row k holds 2^(k−1) nodes.
        std::map<int, int> per_row;
        for (const auto& node : tree) ++per_row[node.row];
        for (int k = 1; k <= 12; ++k) REQUIRE(per_row[k] == 1 << (k - 1));
    }
}

TEST_SUITE("corona") {
    TEST_CASE("x corona up to row 2") {
        const auto c = x_corona(2);
        REQUIRE(c.size() == 2);
        CHECK(c[0].pair == SBPair(1, 2));
        CHECK(c[0].tangent_x == Rational(1, 4));
        CHECK(c[1].pair == SBPair(1, 1));
        CHECK(c[1].tangent_x == Rational(1));
        CHECK(c[1].conic == parabola_conic());
    }

    TEST_CASE("property: x corona tangency equals the listed abscissa") {
        const auto c = x_corona(8);
        for (std::size_t i = 0; i < c.size(); ++i) {
            REQUIRE(conic_tangency_x(c[i].conic) == c[i].tangent_x);
            REQUIRE(c[i].tangent_x == c[i].pair.squared());
            REQUIRE(c[i].row == sb_row_of(c[i].pair));
            if (i + 1 < c.size()) REQUIRE(c[i].tangent_x < c[i + 1].tangent_x);
        }
        // Depth-5 members by abscissa.
        std::vector<SBPair> depth5;
        for (const auto& e : c)
            if (e.row == 5) depth5.push_back(e.pair);
        CHECK(depth5 == std::vector<SBPair>{{1, 5}, {2, 7}, {3, 8}, {3, 7}, {4, 7}, {5, 8}, {5, 7}, {4, 5}});
    }

    TEST_CASE("parabolic corona") {
        const auto f = parabolic_corona(3);
        REQUIRE(f.size() >= 5);
        CHECK(f[0].axis);
        CHECK(f[1].axis);
        CHECK(f[0].depth == 0);
        CHECK(f[2].pair == SBPair(1, 1));
        CHECK(f[2].point == Point<Rational>{Rational(1, 4), Rational(1, 4)});
        CHECK(f[2].depth == 2);
        bool saw12 = false, saw21 = false, saw32 = false;
        for (const auto& e : f) {
            if (e.pair == SBPair(1, 2)) saw12 = e.point == Point<Rational>{Rational(1, 9), Rational(4, 9)};
            if (e.pair == SBPair(2, 1)) saw21 = e.point == Point<Rational>{Rational(4, 9), Rational(1, 9)};
            if (e.pair == SBPair(3, 2)) saw32 = e.point == Point<Rational>{Rational(9, 25), Rational(4, 25)};
        }
        CHECK(saw12);
        CHECK(saw21);
        CHECK(saw32);
        CHECK(parabola_point(3, 2) == parabola_point(deformed_add(SBPair(1, 1), SBPair(2, 1)).p(),
                                                     deformed_add(SBPair(1, 1), SBPair(2, 1)).q()));
    }

    TEST_CASE("property: parabolic corona points lie on the parabola") {
        const Conic par = parabola_conic();
        for (const auto& e : parabolic_corona(7)) {
            if (e.axis) continue;
            REQUIRE(conic_eval(par, e.point) == Rational(0));
            REQUIRE(e.depth == e.row + 1);
            REQUIRE(e.tangencies.size() == 2);
        }
    }

    TEST_CASE("diagonal chain") {
        const auto d = diagonal_chain(3);
        REQUIRE(d.size() == 3);
        CHECK(d[0].point == Point<Rational>{Rational(1, 4), Rational(1, 4)});
        CHECK(d[1].point == Point<Rational>{Rational(1, 12), Rational(1, 12)});
        CHECK(d[0].y_contact == Point<Rational>{0, Rational(1, 4)});
        CHECK(d[1].y_contact == Point<Rational>{0, Rational(1, 9)});
        CHECK(d[2].y_contact == Point<Rational>{0, Rational(1, 16)});
        for (const auto& e : d) {
            CHECK(conic_eval(corona_conic(e.lower.p(), e.lower.q()), e.point) == Rational(0));
            CHECK(conic_eval(corona_conic(e.upper.p(), e.upper.q()), e.point) == Rational(0));
        }
    }

    TEST_CASE("main chain") {
        const auto c = main_chain(3);
        REQUIRE(c.size() == 2);
        CHECK(c[0].point == Point<Rational>{Rational(1, 3), Rational(1, 12)});
        CHECK(c[1].point == Point<Rational>{Rational(1, 2), Rational(1, 24)});
        CHECK(c[0].lower == SBPair(1, 2));
        CHECK(c[0].upper == SBPair(2, 3));
    }

    TEST_CASE("barycentric families sum to one") {
        for (int n = 2; n <= 6; ++n)
            for (const auto& t : {barycentric_main_chain(n), barycentric_parabola_contact(n), barycentric_diagonal(n)})
                CHECK(t[0] + t[1] + t[2] == Rational(1));
    }
}
