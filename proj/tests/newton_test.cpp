#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rectline/newton.hpp"
#include "test_util.hpp"

using namespace rectline;
using namespace rectline::testutil;

namespace {

const BiPoly X = BiPoly::var_x();
const BiPoly Y = BiPoly::var_y();

// y + (x + y^2)^2, the running reduction example
BiPoly worked_example() { return Y + (X + Y * Y) * (X + Y * Y); }

}  // namespace

TEST_CASE("WeightPair invariants") {
    CHECK_THROWS_AS(WeightPair(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(WeightPair(0, 1), std::invalid_argument);
    CHECK_NOTHROW(WeightPair(1, 1));
}

TEST_CASE("weighted_degree worked instances") {
    BiPoly p = X * X * X * Y + Y * Y;
    CHECK(weighted_degree(p, WeightPair(2, 3)) == 11);
    CHECK(weighted_degree(X, WeightPair(5, 3)) == 3);
    CHECK(weighted_degree(X, WeightPair(2, 7)) == 7);
    CHECK(weighted_degree(BiPoly::constant(7), WeightPair(2, 3)) == 0);
    CHECK_THROWS_AS(weighted_degree(BiPoly::zero(), WeightPair(1, 1)), std::invalid_argument);
}

TEST_CASE("leading_part worked instances") {
    BiPoly p = X * X + Y * Y * Y + X * Y + BiPoly::constant(1);
    CHECK(leading_part(p, WeightPair(2, 3)) == X * X + Y * Y * Y);

    BiPoly q = worked_example();
    CHECK(leading_part(q, WeightPair(1, 2)) == (X + Y * Y) * (X + Y * Y));

    WeightPair w(3, 4);
    BiPoly lp = leading_part(q, w);
    CHECK(leading_part(lp, w) == lp);
}

TEST_CASE("ne_edges worked instances") {
    auto edges = ne_edges(worked_example());
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].weight == WeightPair(1, 2));
    CHECK(edges[0].i_min == 0);
    CHECK(edges[0].j_max == 4);
    CHECK(edges[0].steps == 2);
    CHECK(edges[0].j_min() == 0);

    auto fermat = ne_edges(X * X + Y * Y * Y);
    REQUIRE(fermat.size() == 1);
    CHECK(fermat[0].weight == WeightPair(2, 3));
    CHECK(fermat[0].steps == 1);

    CHECK(ne_edges(X * Y + X + Y).empty());
    CHECK_THROWS_AS(ne_edges(BiPoly::constant(3)), std::invalid_argument);
}

TEST_CASE("edge_factorization worked instances") {
    BiPoly q = worked_example();
    auto e = ne_edges(q).at(0);
    EdgeFactorization ef = edge_factorization(q, e);
    CHECK(ef.f == UniPoly({Rational(1), Rational(2), Rational(1)}));
    CHECK(ef.i_min == 0);
    CHECK(ef.j_min == 0);
    CHECK(ef.m == 1);
    REQUIRE(ef.perfect_power.has_value());
    CHECK(ef.perfect_power->c == -1);
    CHECK(ef.perfect_power->n == 2);
    // reconstruction: a (x^k - c y^l)^n = (x + y^2)^2
    BiPoly rebuilt = (X + Y * Y) * (X + Y * Y) * ef.a_lead;
    CHECK(rebuilt == leading_part(q, e.weight));

    BiPoly p2 = X * X + Y;
    auto e2 = ne_edges(p2).at(0);
    CHECK(e2.weight == WeightPair(2, 1));
    EdgeFactorization ef2 = edge_factorization(p2, e2);
    REQUIRE(ef2.perfect_power.has_value());
    CHECK(ef2.perfect_power->c == -1);
    CHECK(ef2.perfect_power->n == 1);

    BiPoly p3 = X * X + Y * Y;
    EdgeFactorization ef3 = edge_factorization(p3, ne_edges(p3).at(0));
    CHECK(ef3.f == UniPoly({Rational(1), Rational(0), Rational(1)}));
    CHECK(ef3.m == 2);
    CHECK_FALSE(ef3.perfect_power.has_value());

    // an edge of a different polynomial is rejected
    CHECK_THROWS_AS(edge_factorization(X * X * X + Y, e), std::invalid_argument);
}

TEST_CASE("infinity_lower_bound worked instances") {
    CHECK(infinity_lower_bound(X * X + Y * Y * Y) == 1);
    CHECK(infinity_lower_bound(X * Y) == 2);
    CHECK(infinity_lower_bound(X * X + Y * Y) == 2);
    CHECK(infinity_lower_bound(X * (BiPoly::constant(1) + X * Y)) == 2);
}

TEST_CASE("grading multiplicativity") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 40; ++it) {
        BiPoly p = random_bipoly(rng, 4, 4, 5, true);
        BiPoly q = random_bipoly(rng, 4, 4, 5, true);
        WeightPair w = random_weights(rng);
        CHECK(weighted_degree(p * q, w) == weighted_degree(p, w) + weighted_degree(q, w));
        CHECK(leading_part(p * q, w) == leading_part(p, w) * leading_part(q, w));
    }
}

TEST_CASE("edge structure invariants on random polynomials") {
    std::mt19937_64 rng(22);
    for (int it = 0; it < 60; ++it) {
        BiPoly p = random_bipoly(rng, 6, 6, 5, true);
        if (p.is_constant()) continue;

        WeightPair w = random_weights(rng);
        long d = weighted_degree(p, w);
        BiPoly hat = leading_part(p, w);
        for (const auto& [e, a] : hat.terms())
            CHECK(w.l * e.i + w.k * e.j == d);  // quasi-homogeneous

        int spanning = 0;
        for (const auto& e : ne_edges(p)) {
            EdgeFactorization ef = edge_factorization(p, e);
            CHECK(ef.f.coeff(0) != 0);
            CHECK(ef.f.coeff(e.steps) != 0);
            // support of the leading part lies on the exponent progression
            BiPoly edge_hat = leading_part(p, e.weight);
            for (const auto& [ep, a] : edge_hat.terms()) {
                long s = (ep.i - e.i_min) / e.weight.k;
                CHECK(ep.i == e.i_min + e.weight.k * s);
                CHECK(ep.j == e.j_max - e.weight.l * s);
                CHECK(s >= 0);
                CHECK(s <= e.steps);
            }
            if (ef.i_min == 0 && ef.j_min == 0) ++spanning;
        }
        CHECK(spanning <= 1);
        if (!ne_edges(p).empty() && infinity_lower_bound(p) == 1) CHECK(spanning == 1);
    }
}
