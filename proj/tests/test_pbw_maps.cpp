/*
 * test_pbw_maps.cpp
 * -----------------
 * Symmetrization, coring sections, and the filtration isomorphism Theta.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lierine/examples.hpp"

using namespace lierine;

TEST_CASE("symmetrization of a quadratic monomial") {
    HeisenbergBundle b = heisenberg_bundle();
    SymElement s = SymElement::monomial(b.g_ctx, {0, 1}, Poly::constant(0, 1));
    CHECK(symmetrize(s).str() == "Q*P + 1/2*C");
    // Round trips in both directions.
    UEAElement u = uea_mul(UEAElement::generator(b.g_ctx, 1),
                           UEAElement::generator(b.g_ctx, 0));
    CHECK(symmetrize(symmetrize_inverse(u)) == u);
    SymElement back = symmetrize_inverse(symmetrize(s));
    CHECK(back.terms == s.terms);
}

TEST_CASE("symmetrization is a coring map") {
    HeisenbergBundle b = heisenberg_bundle();
    SymElement s = SymElement::monomial(b.g_ctx, {0, 1, 1}, Poly::constant(0, 1));
    UEAElement Sm = symmetrize(s);
    CHECK(counit(Sm).is_zero());
    CHECK(counit(symmetrize(SymElement::from_poly(b.g_ctx, Poly::constant(0, 5)))) ==
          Poly::constant(0, 5));
}

TEST_CASE("ordered sections depend on the chosen order") {
    HeisenbergBundle b = heisenberg_bundle();
    UEAElement xy = UEAElement::monomial(b.h_ctx, {0, 1}, Poly::constant(0, 1));
    CHECK(b.ordered.apply(xy).str() == "Q*P");
    CHECK(b.reversed.apply(xy).str() == "Q*P + C");
    CHECK(b.symmetrized.apply(xy).str() == "Q*P + 1/2*C");
    // All agree on the associated graded.
    CHECK(sections_equivalent(b.ordered, b.reversed, 4));
    CHECK(sections_equivalent(b.ordered, b.symmetrized, 4));
}

TEST_CASE("morphism sections require certification") {
    HeisenbergBundle b = heisenberg_bundle();
    // The Heisenberg splitting is not a Lie morphism; requesting the
    // certified kind must be rejected.
    CHECK_THROWS(coring_section(b.pi, b.gamma, CoringSection::Kind::HopfMorphism, b.g_ctx,
                                b.h_ctx));
}

TEST_CASE("sections preserve the counit and the unit") {
    HeisenbergBundle b = heisenberg_bundle();
    for (auto* s : {&b.ordered, &b.reversed, &b.symmetrized}) {
        CHECK(s->apply(UEAElement::unit(b.h_ctx)) == UEAElement::unit(b.g_ctx));
        UEAElement v = UEAElement::monomial(b.h_ctx, {0, 0, 1}, Poly::constant(0, 1));
        CHECK(counit(s->apply(v)).is_zero());
    }
}

TEST_CASE("Theta is bijective for the Heisenberg central line") {
    HeisenbergBundle b = heisenberg_bundle();
    ThetaReport rep = theta_iso_check(heisenberg_theta(b), 3);
    CHECK(rep.bijective);
}

TEST_CASE("Theta is bijective for the shear transformation algebra") {
    TransformationBundle b = transformation_rank3();
    ThetaReport rep = theta_iso_check(transformation_theta(b), 3);
    CHECK(rep.bijective);
}
