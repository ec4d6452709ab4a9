/*
 * test_uea.cpp
 * ------------
 * Enveloping-algebra layer: PBW rewriting, coproduct, counit, translation
 * map, and tensor balancing.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lierine/uea.hpp"

using namespace lierine;

namespace {

CtxPtr heisenberg_ctx() {
    auto g = std::make_shared<LieRinehartAlgebra>(0, std::vector<std::string>{"Q", "P", "C"});
    g->set_bracket(1, 0, {Poly(0), Poly(0), Poly::constant(0, 1)});
    return make_context(g);
}

CtxPtr weyl_ctx() {
    // One generator D with anchor d/dt over Q[t]: the first Weyl algebra.
    auto w = std::make_shared<LieRinehartAlgebra>(1, std::vector<std::string>{"D"});
    w->set_anchor(0, Derivation::coordinate(1, 0));
    return make_context(w);
}

} // namespace

TEST_CASE("PBW rewriting in the Heisenberg algebra") {
    CtxPtr c = heisenberg_ctx();
    UEAElement Q = UEAElement::generator(c, 0), P = UEAElement::generator(c, 1);
    CHECK(uea_mul(P, Q).str() == "Q*P + C");
    CHECK(uea_mul(Q, P).str() == "Q*P");
    // Higher reordering: P^2 Q = Q P^2 + 2 C P.
    CHECK(uea_mul(uea_mul(P, P), Q).str() == "Q*P^2 + 2*P*C");
}

TEST_CASE("Ore relation in the Weyl algebra") {
    CtxPtr c = weyl_ctx();
    UEAElement D = UEAElement::generator(c, 0);
    Poly t = Poly::variable(1, 0);
    // D t = t D + 1.
    UEAElement lhs = right_mul_poly(D, t);
    UEAElement rhs = t * D + UEAElement::unit(c);
    CHECK(lhs == rhs);
    // D^2 t^2 = t^2 D^2 + 4 t D + 2.
    UEAElement D2 = uea_mul(D, D);
    CHECK(right_mul_poly(D2, t * t) ==
          (t * t) * D2 + Rational(4) * (t * D) + Rational(2) * UEAElement::unit(c));
}

TEST_CASE("counit is the action on the base") {
    CtxPtr c = weyl_ctx();
    UEAElement D = UEAElement::generator(c, 0);
    Poly t = Poly::variable(1, 0);
    CHECK(counit(right_mul_poly(D, t)) == Poly::constant(1, 1)); // (D t).1 = 1
    CHECK(counit(t * D).is_zero());
    CHECK(counit(UEAElement::from_poly(c, t * t)) == t * t);
}

TEST_CASE("generators are primitive") {
    CtxPtr c = heisenberg_ctx();
    UEAElement Q = UEAElement::generator(c, 0);
    TensorElement expect(TensorMode::Plain, c, c);
    expect.add_product(Q, UEAElement::unit(c), 1);
    expect.add_product(UEAElement::unit(c), Q, 1);
    CHECK(coproduct(Q) == tensor_canonicalize(expect, TensorMode::OverA));
}

TEST_CASE("coproduct term count is the shuffle count") {
    CtxPtr c = heisenberg_ctx();
    UEAElement u = UEAElement::monomial(c, {0, 1, 2}, Poly::constant(0, 1));
    CHECK(coproduct(u).terms.size() == 8); // 2^3 splits, all distinct letters
}

TEST_CASE("tensor balancing moves coefficients across the tensor sign") {
    CtxPtr c = weyl_ctx();
    Poly t = Poly::variable(1, 0);
    UEAElement D = UEAElement::generator(c, 0);
    TensorElement a(TensorMode::Plain, c, c);
    a.add_product(t * D, UEAElement::unit(c), 1);
    TensorElement b(TensorMode::Plain, c, c);
    b.add_product(D, UEAElement::from_poly(c, t), 1);
    CHECK(tensor_canonicalize(a, TensorMode::OverA) ==
          tensor_canonicalize(b, TensorMode::OverA));
    // Over Aop the two representatives differ: t D != D t in the first leg.
    CHECK(tensor_canonicalize(a, TensorMode::OverAop) !=
          tensor_canonicalize(b, TensorMode::OverAop));
}

TEST_CASE("translation map on generators and products") {
    CtxPtr c = heisenberg_ctx();
    UEAElement Q = UEAElement::generator(c, 0), P = UEAElement::generator(c, 1);
    TensorElement tQ = translation_map(Q);
    TensorElement expect(TensorMode::Plain, c, c);
    expect.add_product(Q, UEAElement::unit(c), 1);
    expect.add_product(UEAElement::unit(c), Q, -1);
    CHECK(tQ == expect);
    // u_+ u_- = eps(u) for u = PQ.
    UEAElement u = uea_mul(P, Q);
    CHECK(translation_map(u).multiply_out() == UEAElement::from_poly(c, counit(u)));
}

TEST_CASE("pushforward along a certified morphism is multiplicative") {
    CtxPtr g = heisenberg_ctx();
    auto h = std::make_shared<LieRinehartAlgebra>(0, std::vector<std::string>{"X", "Y"});
    CtxPtr hc = make_context(h);
    LRAMorphism pi(g->lra(), std::static_pointer_cast<const LieRinehartAlgebra>(h),
                   {{Poly::constant(0, 1), Poly(0)},
                    {Poly(0), Poly::constant(0, 1)},
                    {Poly(0), Poly(0)}});
    UEAElement P = UEAElement::generator(g, 1), Q = UEAElement::generator(g, 0);
    CHECK(pushforward(pi, uea_mul(P, Q), hc) ==
          uea_mul(pushforward(pi, P, hc), pushforward(pi, Q, hc)));
}
