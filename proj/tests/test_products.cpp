/*
 * test_products.cpp
 * -----------------
 * Hopf kernels, 2-cocycles, crossed and smash products, and the curved
 * (tau-twisted) factorization.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lierine/examples.hpp"

using namespace lierine;

TEST_CASE("Hopf kernel membership") {
    HeisenbergBundle b = heisenberg_bundle();
    UEAElement C = UEAElement::generator(b.g_ctx, 2);
    UEAElement Q = UEAElement::generator(b.g_ctx, 0);
    CHECK(hopf_kernel_membership(C, b.kernel));
    CHECK(hopf_kernel_membership(uea_mul(C, C), b.kernel));
    CHECK(!hopf_kernel_membership(Q, b.kernel));
    CHECK(!hopf_kernel_membership(uea_mul(Q, C), b.kernel));
}

TEST_CASE("Hopf kernel basis is the center in the Heisenberg case") {
    HeisenbergBundle b = heisenberg_bundle();
    auto basis = hopf_kernel_basis(b.kernel, 2, 0);
    std::vector<std::string> strs;
    for (auto& u : basis) strs.push_back(u.str());
    std::sort(strs.begin(), strs.end());
    CHECK(strs == std::vector<std::string>{"1", "C", "C^2"});
}

TEST_CASE("cocycle values of the ordered section") {
    HeisenbergBundle b = heisenberg_bundle();
    auto mono = [&](int yn, int xn) {
        PBWMonomial m;
        m.insert(m.end(), (size_t)xn, 0);
        m.insert(m.end(), (size_t)yn, 1);
        return UEAElement::monomial(b.h_ctx, m, Poly::constant(0, 1));
    };
    CHECK(b.ordered_crossed->sigma(mono(2, 0), mono(0, 2)).str() == "2*C^2");
    CHECK(b.ordered_crossed->sigma(mono(0, 1), mono(1, 0)).is_zero());
    CHECK(b.symmetrized_crossed->sigma(
               UEAElement::generator(b.h_ctx, 0), UEAElement::generator(b.h_ctx, 1)).str() ==
          "-1/2*C");
}

TEST_CASE("actions on the central kernel are trivial") {
    HeisenbergBundle b = heisenberg_bundle();
    UEAElement C = UEAElement::generator(b.g_ctx, 2);
    UEAElement X = UEAElement::generator(b.h_ctx, 0);
    CHECK(weak_action(UEAElement::unit(b.h_ctx), C, b.ordered) == C);
    CHECK(weak_action(X, C, b.ordered).is_zero()); // eps(X) C = 0, C central
    // The adjoint action of a primitive is the commutator, zero on the center.
    CHECK(adjoint_action(b.ordered.apply(X), C).is_zero());
    CHECK(adjoint_action(C, C).is_zero());
}

TEST_CASE("crossed product multiplication matches Phi") {
    HeisenbergBundle b = heisenberg_bundle();
    const CrossedContext* cc = b.ordered_crossed.get();
    CrossedElement x(cc), y(cc);
    x.add_term({2}, {1}, Poly::constant(0, 1));      // C # Y
    y.add_term({}, {0, 0}, Poly::constant(0, 1));    // 1 # X^2
    CHECK(phi(crossed_mul(x, y)) == uea_mul(phi(x), phi(y)));
}

TEST_CASE("Psi splits PQ into the documented crossed element") {
    HeisenbergBundle b = heisenberg_bundle();
    UEAElement PQ = uea_mul(UEAElement::generator(b.g_ctx, 1),
                            UEAElement::generator(b.g_ctx, 0));
    CHECK(psi(PQ, b.ordered_crossed.get()).str() == "C # 1 + 1 # X*Y");
    CHECK(phi(psi(PQ, b.ordered_crossed.get())) == PQ);
}

TEST_CASE("the B slot of a crossed element is checked") {
    HeisenbergBundle b = heisenberg_bundle();
    CrossedElement x(b.ordered_crossed.get());
    CHECK_THROWS(x.add_pair(UEAElement::generator(b.g_ctx, 0),
                            UEAElement::unit(b.h_ctx)));
}

TEST_CASE("smash product structure on a transformation algebra") {
    TransformationBundle b = transformation_rank3();
    UEAElement u = UEAElement::monomial(b.ctx, {0, 2}, Poly::constant(2, 1));
    UEAElement v = UEAElement::monomial(b.ctx, {1}, Poly::variable(2, 0));
    CHECK(b.smash.smash_mul(u, v) == uea_mul(u, v));
    // delta' is counital.
    TensorElement d = b.smash.delta_prime(u);
    UEAElement back(b.ctx);
    for (auto& [k, c] : d.terms)
        back += b.smash.eps_prime(d.slot_elem(b.ctx, k.first, c)) *
                d.slot_elem(b.ctx, k.second, 1);
    CHECK(back == u);
}

TEST_CASE("tau context rejects bad input") {
    std::vector<std::vector<std::vector<Rational>>> cs(
        2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, 0)));
    std::vector<std::vector<Poly>> tau(2, std::vector<Poly>(2, Poly(1)));
    tau[0][1] = Poly::variable(1, 0); // not antisymmetric: tau[1][0] stays 0
    auto res = make_tau_context(1, {"X", "Y"}, cs, {Derivation(1), Derivation(1)}, tau);
    CHECK(!res.ok);
}

TEST_CASE("curved factorization on the rank-2 abelian model") {
    std::vector<std::vector<std::vector<Rational>>> cs(
        2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, 0)));
    std::vector<std::vector<Poly>> tau(2, std::vector<Poly>(2, Poly(1)));
    tau[0][1] = Poly::variable(1, 0);
    tau[1][0] = Poly::variable(1, 0) * Rational(-1);
    auto res = make_tau_context(1, {"X", "Y"}, cs, {Derivation(1), Derivation(1)}, tau);
    REQUIRE(res.ok);
    // Y X = X Y - z in the tau-twisted product.
    CtxPtr c = res.ctx;
    UEAElement X = UEAElement::generator(c, 0), Y = UEAElement::generator(c, 1);
    CHECK(uea_mul(Y, X) == uea_mul(X, Y) - Poly::variable(1, 0) * UEAElement::unit(c));
    RainFogReport rep = rain_fog_check(res.ctx, 3);
    CHECK(rep.ok);
}
