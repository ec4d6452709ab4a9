/*
 * examples.hpp
 * ------------
 * Curated catalog of worked examples with golden values: the Heisenberg
 * algebra with its three coring sections and cocycle table, the Moyal star
 * product as an independent cocycle oracle, transformation algebras with the
 * smash-product identification, a semidirect decomposition carrying a genuine
 * Lie-Rinehart section (trivial cocycle), Theta-isomorphism fixtures, and the
 * Euler/gl invariant dimension count.
 */
#pragma once

#include "products.hpp"

namespace lierine {

// ---------------------------------------------------------------------------
// Bundle plumbing
// ---------------------------------------------------------------------------

/*
 * One golden value: a human-readable input expression, the frozen expected
 * canonical print, a provenance tag in {closed-form, trivial, derived}, and
 * the kernel-side computation that must reproduce it.
 */
struct GoldenValue {
    std::string input;
    std::string expected;
    std::string provenance;
    std::function<std::string()> compute;
};

struct ExampleBundle {
    std::string name;
    std::vector<GoldenValue> golden;

    // Re-derive every golden value; failed entries are reported as witnesses.
    bool run_golden(std::vector<std::string>* witnesses = nullptr) const {
        bool ok = true;
        for (auto& g : golden) {
            std::string got = g.compute();
            if (got != g.expected) {
                ok = false;
                if (witnesses)
                    witnesses->push_back(name + ": " + g.input + " expected " + g.expected +
                                         " got " + got);
            }
        }
        return ok;
    }
};

// ---------------------------------------------------------------------------
// Moyal star product
// ---------------------------------------------------------------------------

/*
 * Polynomials in Q, P, C (variables 0, 1, 2).  The star product
 *   f * g = sum_j (C^j / j!) (d_P^j f)(d_Q^j g)
 * terminates on polynomials; its constant term in Q, P extracts the cocycle.
 */
inline Poly moyal_star(const Poly& f, const Poly& g) {
    Poly out(3);
    Poly df = f, dg = g;
    Rational jfact = 1;
    for (int j = 0;; ++j) {
        if (j > 0) {
            df = df.derivative(1); // d/dP
            dg = dg.derivative(0); // d/dQ
            jfact *= j;
            if (df.is_zero() || dg.is_zero()) break;
        }
        ExpVec ce = {0, 0, j};
        out += Poly::monomial(3, ce, 1 / jfact) * df * dg;
    }
    return out;
}

// (f * g) with Q = P = 0: the star-product side of the cocycle table.
inline Poly moyal_sigma(const Poly& f, const Poly& g) {
    Poly s = moyal_star(f, g);
    Poly out(3);
    for (auto& [e, c] : s.terms)
        if (e[0] == 0 && e[1] == 0) out.add_term(e, c);
    return out;
}

// ---------------------------------------------------------------------------
// Heisenberg bundle
// ---------------------------------------------------------------------------

/*
 * g = span{Q, P, C} over A = Q(rationals), [P, Q] = C central; h = span{X, Y}
 * abelian; pi(Q) = X, pi(P) = Y, pi(C) = 0; gamma(X) = Q, gamma(Y) = P.
 * The section gamma is A-linear but not a Lie-Rinehart morphism, so the
 * attached 2-cocycles are nontrivial.
 */
struct HeisenbergBundle : ExampleBundle {
    LRAPtr g_lra, h_lra, n_lra;
    CtxPtr g_ctx, h_ctx, n_ctx;
    LRAMorphism pi, gamma;
    HopfKernelContext kernel;
    CoringSection ordered, reversed, symmetrized;
    std::shared_ptr<CrossedContext> ordered_crossed, reversed_crossed, symmetrized_crossed;
};

inline HeisenbergBundle heisenberg_bundle() {
    HeisenbergBundle b;
    b.name = "heisenberg";
    {
        auto g = std::make_shared<LieRinehartAlgebra>(0, std::vector<std::string>{"Q", "P", "C"});
        g->set_bracket(1, 0, {Poly(0), Poly(0), Poly::constant(0, 1)}); // [P,Q] = C
        b.g_lra = g;
    }
    b.h_lra = std::make_shared<LieRinehartAlgebra>(0, std::vector<std::string>{"X", "Y"});
    b.n_lra = std::make_shared<LieRinehartAlgebra>(0, std::vector<std::string>{"C"});
    b.g_ctx = make_context(b.g_lra);
    b.h_ctx = make_context(b.h_lra);
    b.n_ctx = make_context(b.n_lra);
    b.pi = LRAMorphism(b.g_lra, b.h_lra,
                       {{Poly::constant(0, 1), Poly(0)},
                        {Poly(0), Poly::constant(0, 1)},
                        {Poly(0), Poly(0)}});
    b.gamma = LRAMorphism(b.h_lra, b.g_lra,
                          {{Poly::constant(0, 1), Poly(0), Poly(0)},
                           {Poly(0), Poly::constant(0, 1), Poly(0)}});
    b.kernel = HopfKernelContext{b.pi, b.g_ctx, b.h_ctx, {2}};
    b.ordered = coring_section(b.pi, b.gamma, CoringSection::Kind::Ordered, b.g_ctx, b.h_ctx,
                               {0, 1});
    b.reversed = coring_section(b.pi, b.gamma, CoringSection::Kind::Ordered, b.g_ctx, b.h_ctx,
                                {1, 0});
    b.symmetrized =
        coring_section(b.pi, b.gamma, CoringSection::Kind::Symmetrized, b.g_ctx, b.h_ctx);
    b.ordered_crossed = std::make_shared<CrossedContext>(b.kernel, b.ordered);
    b.reversed_crossed = std::make_shared<CrossedContext>(b.kernel, b.reversed);
    b.symmetrized_crossed = std::make_shared<CrossedContext>(b.kernel, b.symmetrized);

    auto sigma_ord = [b](int yn, int xn) {
        UEAElement y = UEAElement::monomial(b.h_ctx, PBWMonomial((size_t)yn, 1),
                                            Poly::constant(0, 1));
        UEAElement x = UEAElement::monomial(b.h_ctx, PBWMonomial((size_t)xn, 0),
                                            Poly::constant(0, 1));
        return b.ordered_crossed->sigma(y, x).str();
    };
    for (int n = 1; n <= 4; ++n) {
        std::ostringstream in, want;
        in << "sigma_ordered(Y^" << n << ", X^" << n << ")";
        Rational nf = factorial(n);
        want << (nf == 1 ? "" : to_string(nf) + "*") << "C";
        if (n > 1) want << "^" << n;
        b.golden.push_back({in.str(), want.str(), "closed-form",
                            [sigma_ord, n] { return sigma_ord(n, n); }});
    }
    b.golden.push_back(
        {"sigma_ordered(Y, X^2)", "0", "closed-form", [sigma_ord] { return sigma_ord(1, 2); }});
    b.golden.push_back({"sigma_sym(X, Y)", "-1/2*C", "derived", [b] {
                            UEAElement x = UEAElement::generator(b.h_ctx, 0);
                            UEAElement y = UEAElement::generator(b.h_ctx, 1);
                            return b.symmetrized_crossed->sigma(x, y).str();
                        }});
    b.golden.push_back({"P*Q", "Q*P + C", "closed-form", [b] {
                            return uea_mul(UEAElement::generator(b.g_ctx, 1),
                                           UEAElement::generator(b.g_ctx, 0))
                                .str();
                        }});
    b.golden.push_back({"moyal: P*Q", "Q*P + C", "derived", [] {
                            Poly Q = Poly::variable(3, 0), P = Poly::variable(3, 1);
                            std::vector<std::string> names = {"Q", "P", "C"};
                            return moyal_star(P, Q).str(names);
                        }});
    b.golden.push_back({"moyal: (P^2 * Q^2)|0", "2*C^2", "closed-form", [] {
                            Poly Q = Poly::variable(3, 0), P = Poly::variable(3, 1);
                            std::vector<std::string> names = {"Q", "P", "C"};
                            return moyal_sigma(P * P, Q * Q).str(names);
                        }});
    return b;
}

// The intertwiner Q^a P^b C^e -> e_Q^a e_P^b e_C^e from the star-product
// model onto the enveloping algebra of the Heisenberg algebra.
inline UEAElement heisenberg_from_star(const Poly& f, const CtxPtr& g_ctx) {
    UEAElement out(g_ctx);
    for (auto& [e, c] : f.terms) {
        PBWMonomial m;
        m.insert(m.end(), (size_t)e[0], 0);
        m.insert(m.end(), (size_t)e[1], 1);
        m.insert(m.end(), (size_t)e[2], 2);
        out.add_term(m, Poly::constant(0, c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Transformation bundles
// ---------------------------------------------------------------------------

/*
 * A transformation algebra A x h for a finite-dimensional rational Lie
 * algebra h acting on A = Q[x_1..x_n] by derivations.  Its enveloping
 * algebra is identified with the smash product A # U(h); the bundle golden
 * values compare uea_mul against the independent smash formula.
 */
struct TransformationBundle : ExampleBundle {
    LRAPtr lra;
    CtxPtr ctx;
    SmashStructure smash;
};

inline TransformationBundle transformation_bundle(
    const std::string& name, int nvars, const std::vector<std::string>& h_labels,
    const std::vector<std::vector<std::vector<Rational>>>& h_struct,
    const std::vector<Derivation>& action) {
    TransformationBundle b;
    b.name = name;
    TransformationResult tr = transformation_lra(nvars, h_labels, h_struct, action);
    if (!tr.ok) throw std::invalid_argument("transformation_bundle: " + tr.error);
    b.lra = tr.algebra;
    b.ctx = make_context(b.lra);
    b.smash = SmashStructure{b.ctx};
    SmashStructure sm = b.smash;
    CtxPtr ctx = b.ctx;
    b.golden.push_back(
        {"smash product = enveloping product on monomials of degree <= 4", "ok", "derived",
         [sm, ctx, nvars] {
             for (auto& m1 : pbw_monomials_up_to(ctx->rank(), 2))
                 for (auto& m2 : pbw_monomials_up_to(ctx->rank(), 2))
                     for (int v = 0; v < std::max(1, nvars); ++v) {
                         Poly a = nvars ? Poly::variable(nvars, v % nvars)
                                        : Poly::constant(0, 1);
                         UEAElement x = UEAElement::monomial(ctx, m1, Poly::constant(nvars, 1));
                         UEAElement y = UEAElement::monomial(ctx, m2, a);
                         if (sm.smash_mul(x, y) != uea_mul(x, y)) return std::string("mismatch");
                     }
             return std::string("ok");
         }});
    return b;
}

// A = Q[t], h = Q d/dt: the first Weyl algebra.
inline TransformationBundle transformation_weyl() {
    return transformation_bundle("weyl", 1, {"D"}, {{{0}}}, {Derivation::coordinate(1, 0)});
}

// A = Q[x,y], abelian h = span{d/dx, d/dy}.
inline TransformationBundle transformation_rank2() {
    std::vector<std::vector<std::vector<Rational>>> cs(
        2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, 0)));
    return transformation_bundle("translations", 2, {"Dx", "Dy"}, cs,
                                 {Derivation::coordinate(2, 0), Derivation::coordinate(2, 1)});
}

// A = Q[x,y], h = span{d/dx, d/dy, x d/dy} with [Dx, E] = Dy, E = x d/dy.
inline TransformationBundle transformation_rank3() {
    std::vector<std::vector<std::vector<Rational>>> cs(
        3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, 0)));
    cs[0][2][1] = 1;  // [Dx, E] = Dy
    cs[2][0][1] = -1;
    Derivation e(2);
    e = Poly::variable(2, 0) * Derivation::coordinate(2, 1);
    return transformation_bundle("shear", 2, {"Dx", "Dy", "E"}, cs,
                                 {Derivation::coordinate(2, 0), Derivation::coordinate(2, 1), e});
}

// Zero action: the smash product degenerates to the tensor product algebra.
inline TransformationBundle transformation_zero_action() {
    std::vector<std::vector<std::vector<Rational>>> cs(
        1, std::vector<std::vector<Rational>>(1, std::vector<Rational>(1, 0)));
    return transformation_bundle("zero-action", 1, {"Z"}, cs, {Derivation(1)});
}

// ---------------------------------------------------------------------------
// Semidirect bundle: a genuine Lie-Rinehart section (trivial cocycle)
// ---------------------------------------------------------------------------

/*
 * A = Q[t]; n = A.N abelian with zero anchor; h = A.X with anchor d/dt and
 * flat connection nabla_X N = N; tau = 0.  The canonical inclusion of h into
 * n x h is a Lie-Rinehart section, so the attached cocycle is trivial and
 * the crossed product coincides with the smash product.
 */
struct SemidirectBundle : ExampleBundle {
    LRAPtr g_lra, h_lra;
    CtxPtr g_ctx, h_ctx;
    LRAMorphism pi, gamma;
    HopfKernelContext kernel;
    CoringSection section; // HopfMorphism kind
    std::shared_ptr<CrossedContext> crossed;
};

inline SemidirectBundle semidirect_weyl_bundle() {
    SemidirectBundle b;
    b.name = "weyl-semidirect";
    auto n = std::make_shared<LieRinehartAlgebra>(1, std::vector<std::string>{"N"});
    auto h = std::make_shared<LieRinehartAlgebra>(1, std::vector<std::string>{"X"});
    h->set_anchor(0, Derivation::coordinate(1, 0));
    Connection nab(std::static_pointer_cast<const LieRinehartAlgebra>(h), 1);
    nab.mats[0][0][0] = Poly::constant(1, 1); // nabla_X N = N
    Cochain tau = make_lie_cocycle(std::static_pointer_cast<const LieRinehartAlgebra>(h), 1);
    CurvedSumResult cs = curved_semidirect_sum(n, h, nab, tau);
    if (!cs.ok) throw std::logic_error("semidirect_weyl_bundle: " + cs.error);
    b.g_lra = cs.algebra;
    b.h_lra = h;
    b.g_ctx = make_context(b.g_lra);
    b.h_ctx = make_context(b.h_lra);
    b.pi = LRAMorphism(b.g_lra, b.h_lra, {{Poly(1)}, {Poly::constant(1, 1)}});
    b.gamma = LRAMorphism(b.h_lra, b.g_lra, {{Poly(1), Poly::constant(1, 1)}});
    b.kernel = HopfKernelContext{b.pi, b.g_ctx, b.h_ctx, {0}};
    b.section =
        coring_section(b.pi, b.gamma, CoringSection::Kind::HopfMorphism, b.g_ctx, b.h_ctx);
    b.crossed = std::make_shared<CrossedContext>(b.kernel, b.section);
    auto cc = b.crossed;
    CtxPtr hctx = b.h_ctx;
    b.golden.push_back({"sigma(X, X)", "0", "trivial", [cc, hctx] {
                            UEAElement x = UEAElement::generator(hctx, 0);
                            return cc->sigma(x, x).str();
                        }});
    return b;
}

// ---------------------------------------------------------------------------
// Theta fixtures
// ---------------------------------------------------------------------------

// Heisenberg with the central line as h: iota(C') = C, complement {Q, P}.
inline ThetaContext heisenberg_theta(const HeisenbergBundle& b) {
    ThetaContext th;
    auto hc = std::make_shared<LieRinehartAlgebra>(0, std::vector<std::string>{"C"});
    th.iota = LRAMorphism(std::static_pointer_cast<const LieRinehartAlgebra>(hc), b.g_lra,
                          {{Poly(0), Poly(0), Poly::constant(0, 1)}});
    th.sigma = {{Poly::constant(0, 1), Poly(0), Poly(0)},
                {Poly(0), Poly::constant(0, 1), Poly(0)}};
    th.g_ctx = b.g_ctx;
    th.h_ctx = make_context(th.iota.source);
    return th;
}

// Rank-3 transformation algebra with h = A.E (E = x d/dy), complement {Dx, Dy}.
inline ThetaContext transformation_theta(const TransformationBundle& b) {
    ThetaContext th;
    auto hc = std::make_shared<LieRinehartAlgebra>(2, std::vector<std::string>{"E"});
    hc->set_anchor(0, Poly::variable(2, 0) * Derivation::coordinate(2, 1));
    th.iota = LRAMorphism(std::static_pointer_cast<const LieRinehartAlgebra>(hc), b.lra,
                          {{Poly(2), Poly(2), Poly::constant(2, 1)}});
    th.sigma = {{Poly::constant(2, 1), Poly(2), Poly(2)},
                {Poly(2), Poly::constant(2, 1), Poly(2)}};
    th.g_ctx = b.ctx;
    th.h_ctx = make_context(th.iota.source);
    return th;
}

// ---------------------------------------------------------------------------
// Euler / gl invariants
// ---------------------------------------------------------------------------

struct EulerDimensions {
    Integer full_dim;      // dim S^k(V (x) V*)
    Integer invariant_dim; // Euler-invariant bidegree (k,k) piece of S(V + V*)
    Integer kernel_dim;    // kernel of gr Phi: Y^i_j -> X^i P_j in degree k
};

/*
 * V of dimension d.  The symbol map sends the degree-k symmetric power of
 * the d^2 generators Y^i_j to products of X_i P_j inside Q[X, P]; its rank
 * is computed by honest linear algebra on the graded piece, and the
 * Euler-invariant dimension by enumerating bidegree-(k,k) monomials.
 */
inline EulerDimensions euler_gl_invariants(int d, int k) {
    EulerDimensions out;
    out.full_dim = binomial(d * d + k - 1, k);
    out.invariant_dim = binomial(d + k - 1, k) * binomial(d + k - 1, k);
    // gr Phi: multisets of size k over pairs (i,j) -> exponent vectors in
    // Q[X_1..X_d, P_1..P_d]; kernel dimension = #multisets - rank.
    std::vector<PBWMonomial> multisets;
    pbw_monomials_of_length(d * d, k, multisets);
    std::map<ExpVec, int> image_index;
    std::vector<std::map<int, Rational>> cols;
    for (auto& ms : multisets) {
        ExpVec e(2 * d, 0);
        for (int pair : ms) {
            e[pair / d] += 1;     // X_i
            e[d + pair % d] += 1; // P_j
        }
        auto it = image_index.find(e);
        int idx = (it == image_index.end()) ? (image_index[e] = (int)image_index.size())
                                            : it->second;
        cols.push_back({{idx, Rational(1)}});
    }
    QMatrix mat(image_index.size(), std::vector<Rational>(multisets.size(), 0));
    for (size_t j = 0; j < cols.size(); ++j)
        for (auto& [i, c] : cols[j]) mat[i][j] = c;
    out.kernel_dim = Integer((long)multisets.size() - matrix_rank(std::move(mat)));
    return out;
}

} // namespace lierine
