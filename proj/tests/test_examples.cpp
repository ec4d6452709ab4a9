/*
 * test_examples.cpp
 * -----------------
 * The example catalog: golden tables, the Moyal star model, and the
 * Euler-invariant dimension counts.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lierine/examples.hpp"

using namespace lierine;

TEST_CASE("every bundle reproduces its golden table") {
    std::vector<std::string> witnesses;
    CHECK(heisenberg_bundle().run_golden(&witnesses));
    CHECK(semidirect_weyl_bundle().run_golden(&witnesses));
    CHECK(transformation_weyl().run_golden(&witnesses));
    CHECK(transformation_rank2().run_golden(&witnesses));
    CHECK(transformation_rank3().run_golden(&witnesses));
    CHECK(transformation_zero_action().run_golden(&witnesses));
    for (auto& w : witnesses) MESSAGE(w);
}

TEST_CASE("Moyal star product basics") {
    Poly Q = Poly::variable(3, 0), P = Poly::variable(3, 1), C = Poly::variable(3, 2);
    CHECK(moyal_star(P, Q) == Q * P + C);
    CHECK(moyal_star(Q, P) == Q * P);
    CHECK(moyal_star(P, Q) - moyal_star(Q, P) == C);
    CHECK(moyal_sigma(P * P, Q * Q) == Rational(2) * (C * C));
    // Associativity on a nontrivial triple.
    Poly f = P * P + Q, g = Q * P, h = P + C;
    CHECK(moyal_star(moyal_star(f, g), h) == moyal_star(f, moyal_star(g, h)));
}

TEST_CASE("star model intertwines with the enveloping algebra") {
    HeisenbergBundle b = heisenberg_bundle();
    Poly Q = Poly::variable(3, 0), P = Poly::variable(3, 1);
    Poly f = P * P, g = Q * Q;
    CHECK(heisenberg_from_star(moyal_star(f, g), b.g_ctx) ==
          uea_mul(heisenberg_from_star(f, b.g_ctx), heisenberg_from_star(g, b.g_ctx)));
}

TEST_CASE("Euler invariant dimensions") {
    auto d2 = euler_gl_invariants(2, 2);
    CHECK(d2.full_dim == 10);
    CHECK(d2.invariant_dim == 9);
    CHECK(d2.kernel_dim == 1);
    auto d3 = euler_gl_invariants(3, 2);
    CHECK(d3.full_dim == 45);
    CHECK(d3.invariant_dim == 36);
    CHECK(d3.kernel_dim == 9);
    // Degree-one pieces are always bijective.
    for (int d = 1; d <= 3; ++d) CHECK(euler_gl_invariants(d, 1).kernel_dim == 0);
}

TEST_CASE("golden provenance labels are restricted") {
    for (auto bundle : {heisenberg_bundle().golden, semidirect_weyl_bundle().golden})
        for (auto& g : bundle)
            CHECK((g.provenance == "closed-form" || g.provenance == "trivial" ||
                   g.provenance == "derived"));
}
