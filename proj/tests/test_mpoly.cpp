#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace testsupport;

namespace {
const unsigned N = 12;
MPoly X() { return MPoly::variable(N, Var::x); }
MPoly Y() { return MPoly::variable(N, Var::y); }
MPoly C(long v) { return MPoly::constant(N, Rat(v)); }
} // namespace

TEST_CASE("arithmetic and exact division") {
    CHECK((X() + Y()) * (X() - Y()) == X() * X() - Y() * Y());
    CHECK(exact_div(X() * X() - Y() * Y(), X() - Y()) == X() + Y());
    CHECK_THROWS_AS(exact_div(X() * X() + C(1), X()), Error);
    CHECK_THROWS_AS(exact_div(X(), MPoly(N)), Error);
}

TEST_CASE("partial derivatives") {
    CHECK((X() * X() * Y()).derivative(Var::x) == C(2) * X() * Y());
    CHECK((X() * X()).derivative(Var::y).is_zero());
    CHECK((X().pow(3) + X() * Y()).derivative(Var::x) == C(3) * X() * X() + Y());
}

TEST_CASE("gcd examples") {
    CHECK(gcd(X() * X() - Y() * Y(), X() - Y()) == X() - Y());
    CHECK(gcd(X(), Y()) == C(1));
    MPoly s = X() + Y();
    MPoly g = gcd(s * s * X(), s * Y());
    CHECK(g == s);
    // divide-and-check: the result divides both inputs
    CHECK(exact_div(s * s * X(), g) * g == s * s * X());
    CHECK(exact_div(s * Y(), g) * g == s * Y());
}

TEST_CASE("gcd properties on random polynomials") {
    Rng rng(404);
    for (int it = 0; it < 60; ++it) {
        MPoly a = rng.nonzero_poly(N, 3, 3);
        MPoly b = rng.nonzero_poly(N, 3, 3);
        MPoly c = rng.nonzero_poly(N, 2, 2);
        MPoly g = gcd(a, b);
        // divides both, exactly
        CHECK(exact_div(a, g) * g == a);
        CHECK(exact_div(b, g) * g == b);
        // gcd(ac, bc) = gcd(a,b) * c up to the monic normalization
        MPoly gc = gcd(a * c, b * c);
        MPoly expect = g * c;
        expect = expect * expect.leading_coeff().inverse();
        CHECK(gc == expect);
    }
}

TEST_CASE("mixed partials commute") {
    Rng rng(505);
    for (int it = 0; it < 40; ++it) {
        MPoly a = rng.poly(N, 4, 4);
        CHECK(a.derivative(Var::x).derivative(Var::y) ==
              a.derivative(Var::y).derivative(Var::x));
    }
}

TEST_CASE("squarefree decomposition examples") {
    SUBCASE("x^2 y") {
        auto d = squarefree_decompose(X() * X() * Y());
        REQUIRE(d.factors.size() == 2);
        CHECK(d.factors[0].first == X());
        CHECK(d.factors[0].second == 2);
        CHECK(d.factors[1].first == Y());
        CHECK(d.factors[1].second == 1);
    }
    SUBCASE("(x+y)^3") {
        auto d = squarefree_decompose((X() + Y()).pow(3));
        REQUIRE(d.factors.size() == 1);
        CHECK(d.factors[0].first == X() + Y());
        CHECK(d.factors[0].second == 3);
    }
    SUBCASE("x^2 - y^2 already squarefree") {
        auto d = squarefree_decompose(X() * X() - Y() * Y());
        REQUIRE(d.factors.size() == 1);
        CHECK(d.factors[0].second == 1);
    }
}

TEST_CASE("squarefree decomposition reconstructs and factors are coprime") {
    Rng rng(606);
    for (int it = 0; it < 40; ++it) {
        MPoly a = rng.nonzero_poly(N, 2, 2) * rng.nonzero_poly(N, 1, 2).pow(2);
        auto d = squarefree_decompose(a);
        MPoly rebuilt = MPoly::constant(N, d.unit);
        for (const auto& [f, m] : d.factors) rebuilt = rebuilt * f.pow(m);
        CHECK(rebuilt == a);
        for (size_t i = 0; i < d.factors.size(); ++i)
            for (size_t j = i + 1; j < d.factors.size(); ++j)
                CHECK(gcd(d.factors[i].first, d.factors[j].first) == C(1));
    }
}
