/*
 * test_lie_rinehart.cpp
 * ---------------------
 * Structure layer: algebra validation, morphism certification, connections,
 * cocycles, and the two algebra constructions (curved semidirect sums and
 * transformation algebras).
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lierine/lie_rinehart.hpp"

using namespace lierine;

namespace {

std::shared_ptr<LieRinehartAlgebra> heisenberg() {
    auto g = std::make_shared<LieRinehartAlgebra>(0, std::vector<std::string>{"Q", "P", "C"});
    g->set_bracket(1, 0, {Poly(0), Poly(0), Poly::constant(0, 1)});
    return g;
}

} // namespace

TEST_CASE("Heisenberg algebra validates") {
    auto g = heisenberg();
    CHECK(validate_lra(*g).valid);
}

TEST_CASE("a broken Jacobi identity is detected") {
    // [A,B] = C, [B,C] = A, [C,A] = A violates Jacobi.
    auto g = std::make_shared<LieRinehartAlgebra>(0, std::vector<std::string>{"A", "B", "G"});
    g->set_bracket(0, 1, {Poly(0), Poly(0), Poly::constant(0, 1)});
    g->set_bracket(1, 2, {Poly::constant(0, 1), Poly(0), Poly(0)});
    g->set_bracket(2, 0, {Poly::constant(0, 1), Poly(0), Poly(0)});
    ValidationReport rep = validate_lra(*g);
    CHECK(!rep.valid);
    CHECK(!rep.failures.empty());
}

TEST_CASE("anchor incompatibility is detected") {
    // X with anchor d/dt bracketing to zero against tX requires [X, tX] = X.
    auto g = std::make_shared<LieRinehartAlgebra>(1, std::vector<std::string>{"X", "W"});
    g->set_anchor(0, Derivation::coordinate(1, 0));
    g->set_anchor(1, Poly::variable(1, 0) * Derivation::coordinate(1, 0));
    // declare [X, W] = 0 even though the anchors do not commute
    ValidationReport rep = validate_lra(*g);
    CHECK(!rep.valid);
}

TEST_CASE("morphism certification") {
    auto g = heisenberg();
    auto h = std::make_shared<LieRinehartAlgebra>(0, std::vector<std::string>{"X", "Y"});
    LRAMorphism pi(g, h,
                   {{Poly::constant(0, 1), Poly(0)},
                    {Poly(0), Poly::constant(0, 1)},
                    {Poly(0), Poly(0)}});
    CHECK(pi.is_lie_morphism());
    CHECK(pi.is_anchor_compatible());
    // The A-linear splitting X -> Q, Y -> P is NOT a Lie morphism: the
    // bracket upstairs produces the central element.
    LRAMorphism gamma(h, g,
                      {{Poly::constant(0, 1), Poly(0), Poly(0)},
                       {Poly(0), Poly::constant(0, 1), Poly(0)}});
    CHECK(!gamma.is_lie_morphism());
}

TEST_CASE("flat connection has zero curvature") {
    auto h = std::make_shared<LieRinehartAlgebra>(1, std::vector<std::string>{"X"});
    h->set_anchor(0, Derivation::coordinate(1, 0));
    Connection nab(std::static_pointer_cast<const LieRinehartAlgebra>(h), 1);
    nab.mats[0][0][0] = Poly::constant(1, 1);
    auto om = curvature(nab, 0, 0);
    for (auto& row : om)
        for (auto& p : row) CHECK(p.is_zero());
}

TEST_CASE("curved semidirect sum reproduces the expected bracket") {
    auto n = std::make_shared<LieRinehartAlgebra>(1, std::vector<std::string>{"N"});
    auto h = std::make_shared<LieRinehartAlgebra>(1, std::vector<std::string>{"X"});
    h->set_anchor(0, Derivation::coordinate(1, 0));
    Connection nab(std::static_pointer_cast<const LieRinehartAlgebra>(h), 1);
    nab.mats[0][0][0] = Poly::constant(1, 1); // nabla_X N = N
    Cochain tau = make_lie_cocycle(std::static_pointer_cast<const LieRinehartAlgebra>(h), 1);
    CurvedSumResult cs = curved_semidirect_sum(n, h, nab, tau);
    REQUIRE(cs.ok);
    CHECK(validate_lra(*cs.algebra).valid);
    // [N, X] = -nabla_X N = -N in the summed algebra (N first, then X).
    CHECK(cs.algebra->bracket_table[0][1][0] == Poly::constant(1, -1));
}

TEST_CASE("transformation algebra construction and negative control") {
    // h = <Dx, Dy, E> with E = x d/dy: [E, Dx] = 0 would be wrong, the
    // correct table has [Dx, E] = Dy.
    std::vector<std::vector<std::vector<Rational>>> cs(
        3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, 0)));
    cs[0][2][1] = 1;
    cs[2][0][1] = -1;
    std::vector<Derivation> act = {Derivation::coordinate(2, 0), Derivation::coordinate(2, 1),
                                   Poly::variable(2, 0) * Derivation::coordinate(2, 1)};
    TransformationResult ok = transformation_lra(2, {"Dx", "Dy", "E"}, cs, act);
    REQUIRE(ok.ok);
    CHECK(validate_lra(*ok.algebra).valid);

    // Dropping the structure constant makes the action incompatible.
    std::vector<std::vector<std::vector<Rational>>> bad(
        3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, 0)));
    TransformationResult fail = transformation_lra(2, {"Dx", "Dy", "E"}, bad, act);
    CHECK(!fail.ok);
}

TEST_CASE("exterior covariant derivative vanishes on a closed 2-cochain") {
    auto h = std::make_shared<LieRinehartAlgebra>(1, std::vector<std::string>{"X", "Y", "Z"});
    Connection nab(std::static_pointer_cast<const LieRinehartAlgebra>(h), 1);
    Cochain tau = make_lie_cocycle(std::static_pointer_cast<const LieRinehartAlgebra>(h), 1);
    tau.values[{0, 1}] = {Poly::variable(1, 0)};
    Cochain dtau = exterior_covariant_derivative(tau, nab);
    for (auto& [idx, val] : dtau.values)
        for (auto& p : val) CHECK(p.is_zero());
}
