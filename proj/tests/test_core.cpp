/*
 * test_core.cpp
 * -------------
 * Exact arithmetic foundations: rationals, polynomials, derivations, and
 * the rational linear algebra helpers.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lierine/derivation.hpp"
#include "lierine/linalg.hpp"

using namespace lierine;

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(10, 2) == 45);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(4, 0) == 1);
}

TEST_CASE("polynomial ring laws") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly f = x * x + Rational(2, 3) * y;
    Poly g = y * y - x;
    CHECK(f * g == g * f);
    CHECK(f * (g + x) == f * g + f * x);
    CHECK((f - f).is_zero());
    CHECK(f.total_degree() == 2);
}

TEST_CASE("polynomial printing is canonical") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly f = x * x - Rational(1, 2) * y + Poly::constant(2, 3);
    CHECK(f.str({"x", "y"}) == "x^2 - 1/2*y + 3");
    CHECK(Poly(2).str({"x", "y"}) == "0");
}

TEST_CASE("derivative and Leibniz rule") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Derivation d = Derivation::coordinate(2, 0) + y * Derivation::coordinate(2, 1);
    Poly f = x * y, g = x + y * y;
    CHECK(d.apply(f * g) == d.apply(f) * g + f * d.apply(g));
    CHECK(d.apply(Poly::constant(2, 7)).is_zero());
}

TEST_CASE("derivation commutator acts as the bracket of operators") {
    Poly x = Poly::variable(2, 0);
    Derivation a = x * Derivation::coordinate(2, 1);
    Derivation b = Derivation::coordinate(2, 0);
    // [a, b] = -d/dy on functions, computed through compositions.
    Poly f = Poly::variable(2, 1) * x;
    CHECK(a.apply(b.apply(f)) - b.apply(a.apply(f)) ==
          Derivation::coordinate(2, 1).apply(f) * Rational(-1));
}

TEST_CASE("nullspace of a rational matrix") {
    // x + y = 0, 2x + 2y = 0 has a one-dimensional kernel.
    QMatrix m = {{1, 1}, {2, 2}};
    auto ns = nullspace(m, 2);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] * Rational(1) + ns[0][1] * Rational(1) == 0);
    // An invertible matrix has none.
    CHECK(nullspace({{1, 0}, {1, 1}}, 2).empty());
}

TEST_CASE("row span comparison") {
    QMatrix a = {{1, 0}, {0, 1}};
    QMatrix b = {{1, 1}, {1, -1}};
    QMatrix c = {{1, 1}};
    CHECK(same_row_span(a, b));
    CHECK(!same_row_span(a, c));
    CHECK(same_row_span(c, {{2, 2}, {3, 3}}));
}
