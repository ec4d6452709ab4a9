/*
 * pbw_maps.hpp
 * ------------
 * The symmetrization map S: S_A(g) -> U_A(g), its inverse by filtration
 * descent, coring sections Gamma built from A-linear splittings (symmetrized,
 * ordered, and Hopf-morphism kinds), coring-morphism checking, the Theta
 * freeness isomorphism, and graded comparison of sections.
 */
#pragma once

#include "linalg.hpp"
#include "uea.hpp"

namespace lierine {

/*
 * Element of the symmetric algebra S_A(g): same monomial bookkeeping as the
 * enveloping algebra, but the product is commutative (merge sorted words).
 */
class SymElement {
public:
    CtxPtr ctx;
    std::map<PBWMonomial, Poly> terms;

    SymElement() = default;
    explicit SymElement(CtxPtr c) : ctx(std::move(c)) {}

    static SymElement from_poly(CtxPtr c, const Poly& a) {
        SymElement s(std::move(c));
        if (!a.is_zero()) s.terms[{}] = a;
        return s;
    }
    static SymElement monomial(CtxPtr c, PBWMonomial m, const Poly& a) {
        std::sort(m.begin(), m.end());
        SymElement s(std::move(c));
        if (!a.is_zero()) s.terms[m] = a;
        return s;
    }

    bool is_zero() const { return terms.empty(); }

    int degree() const {
        int d = -1;
        for (auto& [m, a] : terms) d = std::max(d, (int)m.size());
        return d;
    }

    void add_term(PBWMonomial m, const Poly& a) {
        if (a.is_zero()) return;
        std::sort(m.begin(), m.end());
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(std::move(m), a);
        } else {
            it->second += a;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    SymElement& operator+=(const SymElement& o) {
        for (auto& [m, a] : o.terms) add_term(m, a);
        return *this;
    }
    SymElement& operator-=(const SymElement& o) {
        for (auto& [m, a] : o.terms) add_term(m, -a);
        return *this;
    }
    friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
    friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }

    friend SymElement operator*(const SymElement& a, const SymElement& b) {
        SymElement r(a.ctx);
        for (auto& [ma, ca] : a.terms)
            for (auto& [mb, cb] : b.terms) {
                PBWMonomial m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                r.add_term(std::move(m), ca * cb);
            }
        return r;
    }

    bool operator==(const SymElement& o) const { return terms == o.terms; }
    bool operator!=(const SymElement& o) const { return !(*this == o); }
};

/*
 * S(chi_{j_1}...chi_{j_k}) = (1/k!) sum over all permutations of the word,
 * evaluated through the PBW normal form.  Enumerating distinct arrangements
 * with next_permutation and averaging by their count gives the same value
 * (each distinct arrangement occurs k!/#distinct times in the full sum).
 */
inline UEAElement symmetrize(const SymElement& s) {
    const CtxPtr& c = s.ctx;
    UEAElement out(c);
    for (auto& [m, a] : s.terms) {
        PBWMonomial word = m; // sorted = first arrangement
        std::vector<PBWMonomial> arrangements;
        do {
            arrangements.push_back(word);
        } while (std::next_permutation(word.begin(), word.end()));
        Rational w = Rational(1) / Integer(arrangements.size());
        UEAElement acc(c);
        for (auto& arr : arrangements) {
            UEAElement t = UEAElement::from_poly(c, a);
            for (int g : arr) t = right_mul_gen(t, g);
            acc += t;
        }
        out += w * acc;
    }
    return out;
}

/*
 * Inverse of S by triangular filtration descent: the top-degree symbol of
 * S(chi_m) is e_m, so repeatedly peel the top filtration layer of u,
 * append its symbol, and subtract its symmetrization.
 */
inline SymElement symmetrize_inverse(UEAElement u) {
    SymElement out(u.ctx);
    while (!u.is_zero()) {
        int k = u.degree();
        SymElement top(u.ctx);
        for (auto& [m, a] : u.terms)
            if ((int)m.size() == k) top.add_term(m, a);
        out += top;
        u -= symmetrize(top);
    }
    return out;
}

// Apply an A-linear map on generators, S_A(gamma): S_A(h) -> S_A(g).
inline SymElement sym_apply_linear(const LRAMorphism& gamma, const SymElement& s,
                                   const CtxPtr& target) {
    std::vector<SymElement> images;
    for (int i = 0; i < gamma.source->rank; ++i) {
        SymElement gi(target);
        for (int j = 0; j < gamma.target->rank; ++j)
            if (!gamma.matrix[i][j].is_zero()) gi.add_term({j}, gamma.matrix[i][j]);
        images.push_back(gi);
    }
    SymElement out(target);
    for (auto& [m, a] : s.terms) {
        SymElement t = SymElement::from_poly(target, a);
        for (int g : m) t = t * images[g];
        out += t;
    }
    return out;
}

/*
 * Coring sections Gamma: U_A(h) -> U_A(g) of the bialgebroid surjection
 * induced by pi, attached to an A-linear splitting gamma:
 *
 *   Symmetrized:  Gamma = S_g . S_A(gamma) . S_h^{-1},
 *   Ordered:      PBW monomials are reordered by an explicit generator
 *                 priority and mapped factorwise through gamma,
 *   HopfMorphism: Gamma = U_A(gamma) for a Lie-Rinehart section
 *                 (multiplicative, hence a Hopf algebroid morphism section).
 */
class CoringSection {
public:
    enum class Kind { Symmetrized, Ordered, HopfMorphism };

    Kind kind = Kind::Symmetrized;
    LRAMorphism pi;    // g -> h
    LRAMorphism gamma; // h -> g
    std::vector<int> order; // Ordered kind: h-generator indices, highest priority first
    CtxPtr g_ctx, h_ctx;

    UEAElement apply(const UEAElement& u) const {
        switch (kind) {
        case Kind::Symmetrized: {
            SymElement s = symmetrize_inverse(u);
            return symmetrize(sym_apply_linear(gamma, s, g_ctx));
        }
        case Kind::Ordered: {
            std::vector<int> priority(gamma.source->rank, 0);
            for (size_t p = 0; p < order.size(); ++p) priority[order[p]] = (int)p;
            UEAElement out(g_ctx);
            for (auto& [m, a] : u.terms) {
                PBWMonomial w = m;
                std::stable_sort(w.begin(), w.end(),
                                 [&](int x, int y) { return priority[x] < priority[y]; });
                UEAElement t = UEAElement::from_poly(g_ctx, a);
                for (int g : w) {
                    UEAElement gi(g_ctx);
                    for (int j = 0; j < gamma.target->rank; ++j)
                        if (!gamma.matrix[g][j].is_zero()) gi.add_term({j}, gamma.matrix[g][j]);
                    t = uea_mul(t, gi);
                }
                out += t;
            }
            return out;
        }
        case Kind::HopfMorphism:
            return pushforward(gamma, u, g_ctx);
        }
        throw std::logic_error("CoringSection: bad kind");
    }
};

// Build a CoringSection, enforcing the certification the kind requires.
inline CoringSection coring_section(const LRAMorphism& pi, const LRAMorphism& gamma,
                                    CoringSection::Kind kind, const CtxPtr& g_ctx,
                                    const CtxPtr& h_ctx, std::vector<int> order = {}) {
    SplittingClass cls = check_splitting(pi, gamma);
    if (cls == SplittingClass::NotSection)
        throw std::invalid_argument("coring_section: gamma is not a section of pi");
    if (kind == CoringSection::Kind::HopfMorphism && cls != SplittingClass::LieRinehartSection)
        throw std::invalid_argument("coring_section: HopfMorphism kind needs a Lie-Rinehart section");
    CoringSection s;
    s.kind = kind;
    s.pi = pi;
    s.gamma = gamma;
    s.g_ctx = g_ctx;
    s.h_ctx = h_ctx;
    if (kind == CoringSection::Kind::Ordered) {
        if (order.empty())
            for (int i = 0; i < gamma.source->rank; ++i) order.push_back(i);
        s.order = std::move(order);
    }
    return s;
}

struct CoringCheckReport {
    bool ok = true;
    std::string witness; // first failing monomial, if any
};

/*
 * Verify Delta . F = (F (x) F) . Delta and eps . F = eps on all source
 * monomials of length <= k.  F maps U(src) -> U(tgt); both coproducts are
 * compared as OverA canonical forms.
 */
inline CoringCheckReport check_coring_morphism(
    const std::function<UEAElement(const UEAElement&)>& F, const CtxPtr& src, const CtxPtr& tgt,
    int k) {
    CoringCheckReport rep;
    for (auto& m : pbw_monomials_up_to(src->rank(), k)) {
        UEAElement u = UEAElement::monomial(src, m, Poly::constant(src->nvars(), 1));
        UEAElement fu = F(u);
        if (counit(fu) != counit(u)) {
            rep.ok = false;
            rep.witness = "counit mismatch on " + u.str();
            return rep;
        }
        TensorElement lhs = tensor_canonicalize(coproduct(fu), TensorMode::OverA);
        TensorElement rhs = tensor_canonicalize(
            coproduct(u).map_slots(F, F, tgt, tgt), TensorMode::OverA);
        if (lhs != rhs) {
            rep.ok = false;
            rep.witness = "comultiplicativity fails on " + u.str();
            return rep;
        }
    }
    return rep;
}

/*
 * Theta: U_A(h) (x)_A S_A(g/h) -> U_A(g),  u (x) s -> U(iota)(u) . S_g(S_A(sigma)(s)).
 *
 * Data: the inclusion iota: h -> g and an A-linear section sigma of the
 * module quotient g -> g/h, given by its images in g (one per quotient basis
 * vector).  theta_check verifies bijectivity on every filtration piece <= k
 * by certifying that the change-of-basis matrix has a unit determinant --
 * the graded pieces of Theta are symmetric powers of the module isomorphism
 * [iota | sigma], so a unit determinant there is equivalent to per-piece
 * bijectivity -- and additionally performs an honest rational rank check
 * whenever the matrix of Theta on the piece is scalar.
 */
class ThetaContext {
public:
    LRAMorphism iota; // h -> g, certified inclusion
    std::vector<ModuleVec> sigma; // images in g of the quotient basis
    CtxPtr g_ctx, h_ctx;

    UEAElement forward(const UEAElement& u_h, const SymElement& s_quot) const {
        UEAElement left = pushforward(iota, u_h, g_ctx);
        // S_A(sigma) on the quotient symbol, then symmetrize in U(g).
        SymElement image(g_ctx);
        for (auto& [m, a] : s_quot.terms) {
            SymElement t = SymElement::from_poly(g_ctx, a);
            for (int q : m) {
                SymElement qi(g_ctx);
                for (int j = 0; j < iota.target->rank; ++j)
                    if (!sigma[q][j].is_zero()) qi.add_term({j}, sigma[q][j]);
                t = t * qi;
            }
            image += t;
        }
        return uea_mul(left, symmetrize(image));
    }
};

struct ThetaReport {
    bool bijective = false;
    std::string detail;
};

inline ThetaReport theta_iso_check(const ThetaContext& th, int k) {
    ThetaReport rep;
    int mh = th.iota.source->rank;
    int mg = th.iota.target->rank;
    int mq = (int)th.sigma.size();
    if (mh + mq != mg) {
        rep.detail = "quotient data has wrong rank";
        return rep;
    }
    int nv = th.iota.target->nvars;
    // Unit-determinant certificate for the module isomorphism h + g/h = g.
    std::vector<std::vector<Poly>> M(mg, std::vector<Poly>(mg, Poly(nv)));
    for (int i = 0; i < mh; ++i)
        for (int j = 0; j < mg; ++j) M[j][i] = th.iota.matrix[i][j];
    for (int q = 0; q < mq; ++q)
        for (int j = 0; j < mg; ++j) M[j][mh + q] = th.sigma[q][j];
    Poly det = poly_det(M, nv);
    if (!det.is_constant() || det.constant_value() == 0) {
        rep.detail = "module change-of-basis determinant is not a unit: " + det.str();
        return rep;
    }
    // Honest matrix rank check per filtration piece when Theta is scalar.
    std::vector<PBWMonomial> g_basis = pbw_monomials_up_to(mg, k);
    std::map<PBWMonomial, int> g_index;
    for (size_t i = 0; i < g_basis.size(); ++i) g_index[g_basis[i]] = (int)i;
    std::vector<std::pair<int, std::vector<Rational>>> rows; // (domain degree, image coords)
    bool scalar = true;
    for (int h_len = 0; h_len <= k && scalar; ++h_len)
        for (int q_len = 0; q_len + h_len <= k && scalar; ++q_len) {
            std::vector<PBWMonomial> hs, qs;
            pbw_monomials_of_length(mh, h_len, hs);
            pbw_monomials_of_length(mq, q_len, qs);
            for (auto& hm : hs)
                for (auto& qm : qs) {
                    UEAElement uh =
                        UEAElement::monomial(th.h_ctx, hm, Poly::constant(nv, 1));
                    SymElement sq(th.g_ctx);
                    sq.terms[qm] = Poly::constant(nv, 1);
                    UEAElement img = th.forward(uh, sq);
                    std::vector<Rational> row(g_basis.size(), 0);
                    for (auto& [m, a] : img.terms) {
                        if (!a.is_constant()) {
                            scalar = false;
                            break;
                        }
                        row[g_index.at(m)] = a.constant_value();
                    }
                    if (!scalar) break;
                    rows.emplace_back(h_len + q_len, std::move(row));
                }
        }
    if (scalar) {
        // Honest rank check on each filtration piece <= n, n = 0..k.
        for (int n = 0; n <= k; ++n) {
            std::vector<int> cols;
            for (size_t i = 0; i < g_basis.size(); ++i)
                if ((int)g_basis[i].size() <= n) cols.push_back((int)i);
            QMatrix mat;
            for (auto& [deg, row] : rows) {
                if (deg > n) continue;
                std::vector<Rational> sub;
                for (int ci : cols) sub.push_back(row[ci]);
                mat.push_back(std::move(sub));
            }
            if (mat.size() != cols.size() || matrix_rank(mat) != (int)cols.size()) {
                rep.detail = "rational rank check failed on filtration piece <= " +
                             std::to_string(n);
                return rep;
            }
        }
        rep.detail = "unit determinant + full rational rank on each piece <= " + std::to_string(k);
    } else {
        rep.detail = "unit determinant certificate (polynomial coefficients) at degree <= " +
                     std::to_string(k);
    }
    rep.bijective = true;
    return rep;
}

/*
 * Two sections are equivalent iff their induced graded maps agree on every
 * graded piece <= k: Gamma1(u) - Gamma2(u) must drop filtration degree for
 * each source monomial u.
 */
inline bool sections_equivalent(const CoringSection& s1, const CoringSection& s2, int k) {
    const CtxPtr& h = s1.h_ctx;
    for (int l = 0; l <= k; ++l) {
        std::vector<PBWMonomial> monos;
        pbw_monomials_of_length(h->rank(), l, monos);
        for (auto& m : monos) {
            UEAElement u = UEAElement::monomial(h, m, Poly::constant(h->nvars(), 1));
            UEAElement diff = s1.apply(u) - s2.apply(u);
            if (diff.degree() >= l) return false;
        }
    }
    return true;
}

} // namespace lierine
