/*
 * uea.hpp
 * -------
 * The PBW engine for universal enveloping algebras U_A(g) of Lie-Rinehart
 * algebras, plus the coalgebra structure and the translation map.
 *
 * Canonical form: an element is a finite map from PBW monomials (sorted,
 * non-decreasing generator index sequences; the PBW order IS the basis
 * index order and is part of the algebra definition) to LEFT coefficients
 * in A.  Rewriting rules:
 *     e_j a   ->  a e_j + omega(e_j)(a)        (coefficients move left)
 *     e_j e_i ->  e_i e_j + [e_j, e_i]          (j > i)
 * applied leftmost-outermost; each step decreases (total length, inversion
 * count, coefficient positions) lexicographically, so rewriting terminates.
 * Confluence is not assumed: an associativity oracle over random triples is
 * part of the test suite.
 *
 * The engine is written against an abstract EnvelopeContext so the same
 * rewriting also serves quotients whose generator brackets acquire a
 * degree-0 (coefficient) term, as needed for tau-crossed products.
 */
#pragma once

#include "lie_rinehart.hpp"

#include <cstdint>
#include <variant>

namespace lierine {

using PBWMonomial = std::vector<int>; // non-decreasing generator indices; empty = 1

/*
 * Structure data consumed by the rewriting engine: generator count, the
 * bracket of two generators as a degree <= 1 element (possibly with a
 * degree-0 part), and the action of a generator on coefficients.
 */
class EnvelopeContext {
public:
    virtual ~EnvelopeContext() = default;
    virtual int nvars() const = 0;
    virtual int rank() const = 0;
    virtual const std::string& label(int i) const = 0;
    // [e_i, e_j] as a map monomial -> coefficient with monomial length <= 1.
    virtual std::map<PBWMonomial, Poly> gen_bracket(int i, int j) const = 0;
    // omega(e_i)(a).
    virtual Poly anchor_apply(int i, const Poly& a) const = 0;
    // The underlying Lie-Rinehart algebra, if this context is a genuine UEA.
    virtual LRAPtr lra() const { return nullptr; }
    // Display name of base variable i (canonical prints).
    virtual std::string var_label(int i) const { return "x" + std::to_string(i + 1); }
};

using CtxPtr = std::shared_ptr<const EnvelopeContext>;

class LRAContext final : public EnvelopeContext {
public:
    explicit LRAContext(LRAPtr alg) : L(std::move(alg)) {}
    int nvars() const override { return L->nvars; }
    int rank() const override { return L->rank; }
    const std::string& label(int i) const override { return L->labels[i]; }
    std::map<PBWMonomial, Poly> gen_bracket(int i, int j) const override {
        std::map<PBWMonomial, Poly> r;
        for (int k = 0; k < L->rank; ++k)
            if (!L->bracket_table[i][j][k].is_zero()) r[{k}] = L->bracket_table[i][j][k];
        return r;
    }
    Poly anchor_apply(int i, const Poly& a) const override { return L->anchor_table[i].apply(a); }
    std::string var_label(int i) const override { return L->var_names[i]; }
    LRAPtr lra() const override { return L; }

private:
    LRAPtr L;
};

inline CtxPtr make_context(LRAPtr alg) { return std::make_shared<LRAContext>(std::move(alg)); }

class UEAElement {
public:
    CtxPtr ctx;
    std::map<PBWMonomial, Poly> terms;

    UEAElement() = default;
    explicit UEAElement(CtxPtr c) : ctx(std::move(c)) {}

    static UEAElement zero(CtxPtr c) { return UEAElement(std::move(c)); }
    static UEAElement unit(CtxPtr c) {
        Poly one = Poly::constant(c->nvars(), 1);
        return from_poly(std::move(c), one);
    }
    static UEAElement from_poly(CtxPtr c, const Poly& a) {
        UEAElement u(std::move(c));
        if (!a.is_zero()) u.terms[{}] = a;
        return u;
    }
    static UEAElement generator(CtxPtr c, int i) {
        if (i < 0 || i >= c->rank()) throw std::out_of_range("UEAElement::generator index");
        UEAElement u(c);
        u.terms[{i}] = Poly::constant(c->nvars(), 1);
        return u;
    }
    static UEAElement monomial(CtxPtr c, const PBWMonomial& m, const Poly& a) {
        for (size_t t = 0; t + 1 < m.size(); ++t)
            if (m[t] > m[t + 1]) throw std::invalid_argument("UEAElement::monomial not sorted");
        UEAElement u(std::move(c));
        if (!a.is_zero()) u.terms[m] = a;
        return u;
    }

    bool is_zero() const { return terms.empty(); }

    // Filtration degree (max monomial length; -1 for 0).
    int degree() const {
        int d = -1;
        for (auto& [m, a] : terms) d = std::max(d, (int)m.size());
        return d;
    }

    void add_term(const PBWMonomial& m, const Poly& a) {
        if (a.is_zero()) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, a);
        } else {
            it->second += a;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    UEAElement& operator+=(const UEAElement& o) {
        for (auto& [m, a] : o.terms) add_term(m, a);
        return *this;
    }
    UEAElement& operator-=(const UEAElement& o) {
        for (auto& [m, a] : o.terms) add_term(m, -a);
        return *this;
    }
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator-(const UEAElement& a) {
        UEAElement r(a.ctx);
        for (auto& [m, c] : a.terms) r.terms[m] = -c;
        return r;
    }
    friend UEAElement operator*(const Rational& c, const UEAElement& a) {
        UEAElement r(a.ctx);
        if (c == 0) return r;
        for (auto& [m, k] : a.terms) r.terms[m] = c * k;
        return r;
    }
    friend UEAElement operator*(const Poly& p, const UEAElement& a) {
        UEAElement r(a.ctx);
        for (auto& [m, k] : a.terms) r.add_term(m, p * k);
        return r;
    }

    // Equality is canonical-form equality; contexts are assumed compatible.
    bool operator==(const UEAElement& o) const { return terms == o.terms; }
    bool operator!=(const UEAElement& o) const { return !(*this == o); }

    std::string str() const {
        if (terms.empty()) return "0";
        std::vector<std::string> names;
        for (int i = 0; i < ctx->nvars(); ++i) names.push_back(ctx->var_label(i));
        // Canonical print: degree-major, then PBW-lexicographic; repeated
        // generators collapse to powers.
        std::vector<const std::pair<const PBWMonomial, Poly>*> order;
        for (auto& t : terms) order.push_back(&t);
        std::stable_sort(order.begin(), order.end(), [](auto* s, auto* t) {
            if (s->first.size() != t->first.size()) return s->first.size() > t->first.size();
            return s->first < t->first;
        });
        std::string out;
        for (auto* tp : order) {
            const auto& [m, a] = *tp;
            std::string piece, mono;
            for (size_t i = 0; i < m.size();) {
                size_t j = i;
                while (j < m.size() && m[j] == m[i]) ++j;
                if (!mono.empty()) mono += "*";
                mono += ctx->label(m[i]);
                if (j - i > 1) mono += "^" + std::to_string(j - i);
                i = j;
            }
            bool atomic = a.terms.size() == 1;
            std::string coeff = a.str(names);
            if (mono.empty()) {
                piece = coeff;
            } else if (coeff == "1") {
                piece = mono;
            } else if (coeff == "-1") {
                piece = "-" + mono;
            } else {
                piece = (atomic ? coeff : "(" + coeff + ")") + "*" + mono;
            }
            if (out.empty()) {
                out = piece;
            } else if (piece.size() && piece[0] == '-') {
                out += " - " + piece.substr(1);
            } else {
                out += " + " + piece;
            }
        }
        return out;
    }

private:
    static int c_nvars(const CtxPtr& c) { return c->nvars(); }
};

// ---------------------------------------------------------------------------
// Rewriting primitives
// ---------------------------------------------------------------------------

UEAElement right_mul_gen(const UEAElement& u, int g);
UEAElement right_mul_poly(const UEAElement& u, const Poly& p);

// Multiply a canonical element on the right by a single generator e_g.
inline UEAElement right_mul_gen(const UEAElement& u, int g) {
    const CtxPtr& c = u.ctx;
    UEAElement out(c);
    for (auto& [m, a] : u.terms) {
        if (m.empty() || m.back() <= g) {
            PBWMonomial mm = m;
            mm.push_back(g);
            out.add_term(mm, a);
            continue;
        }
        // m = m' j with j > g:  a e_{m'} e_j e_g = a e_{m'} e_g e_j + a e_{m'} [e_j, e_g].
        PBWMonomial head(m.begin(), m.end() - 1);
        int j = m.back();
        UEAElement base = UEAElement::monomial(c, head, a);
        out += right_mul_gen(right_mul_gen(base, g), j);
        for (auto& [bm, bc] : c->gen_bracket(j, g)) {
            UEAElement t = right_mul_poly(base, bc);
            for (int gen : bm) t = right_mul_gen(t, gen);
            out += t;
        }
    }
    return out;
}

// Multiply a canonical element on the right by a base coefficient:
// a e_{m'} e_j p = a (e_{m'} p) e_j + a e_{m'} omega(e_j)(p).
inline UEAElement right_mul_poly(const UEAElement& u, const Poly& p) {
    const CtxPtr& c = u.ctx;
    UEAElement out(c);
    if (p.is_zero()) return out;
    for (auto& [m, a] : u.terms) {
        if (m.empty()) {
            out.add_term(m, a * p);
            continue;
        }
        PBWMonomial head(m.begin(), m.end() - 1);
        int j = m.back();
        UEAElement base = UEAElement::monomial(c, head, a);
        out += right_mul_gen(right_mul_poly(base, p), j);
        out += right_mul_poly(base, c->anchor_apply(j, p));
    }
    return out;
}

inline UEAElement uea_mul(const UEAElement& u, const UEAElement& v) {
    if (u.ctx.get() != v.ctx.get() && u.ctx->rank() != v.ctx->rank())
        throw std::invalid_argument("uea_mul: algebra mismatch");
    UEAElement out(u.ctx);
    for (auto& [m, b] : v.terms) {
        UEAElement t = right_mul_poly(u, b);
        for (int g : m) t = right_mul_gen(t, g);
        out += t;
    }
    return out;
}

inline UEAElement operator*(const UEAElement& a, const UEAElement& b) { return uea_mul(a, b); }

// A word factor is either a generator index or a base coefficient.
using WordFactor = std::variant<int, Poly>;

inline UEAElement normal_form(const CtxPtr& c, const std::vector<WordFactor>& word) {
    UEAElement out = UEAElement::unit(c);
    for (auto& f : word) {
        if (std::holds_alternative<int>(f)) {
            int g = std::get<int>(f);
            if (g < 0 || g >= c->rank()) throw std::out_of_range("normal_form: generator index");
            out = right_mul_gen(out, g);
        } else {
            out = right_mul_poly(out, std::get<Poly>(f));
        }
    }
    return out;
}

// epsilon(a) = a on the unit monomial, 0 on monomials of length >= 1.
inline Poly counit(const UEAElement& u) {
    auto it = u.terms.find(PBWMonomial{});
    return it == u.terms.end() ? Poly(u.ctx->nvars()) : it->second;
}

// The left U-action on A: act(u, a) = epsilon(u . iota(a)).
inline Poly act_on_base(const UEAElement& u, const Poly& a) {
    return counit(right_mul_poly(u, a));
}

inline UEAElement degree_truncate(const UEAElement& u, int k) {
    UEAElement r(u.ctx);
    for (auto& [m, a] : u.terms)
        if ((int)m.size() <= k) r.terms[m] = a;
    return r;
}

// ---------------------------------------------------------------------------
// Right-coefficient form
// ---------------------------------------------------------------------------

namespace detail {
// a e_m as a sum of e_{m'} b' with coefficients on the RIGHT:
// a e_g e_rest = e_g (a e_rest) - omega(e_g)(a) e_rest.
inline void rcf_term(const CtxPtr& c, const PBWMonomial& m, const Poly& a,
                     std::map<PBWMonomial, Poly>& out, bool negate) {
    if (a.is_zero()) return;
    if (m.empty()) {
        auto it = out.find(m);
        Poly v = negate ? -a : a;
        if (it == out.end()) {
            out.emplace(m, v);
            if (out[m].is_zero()) out.erase(m);
        } else {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
        }
        return;
    }
    int g = m.front();
    PBWMonomial rest(m.begin() + 1, m.end());
    std::map<PBWMonomial, Poly> inner;
    rcf_term(c, rest, a, inner, false);
    for (auto& [mm, b] : inner) {
        PBWMonomial full;
        full.push_back(g);
        full.insert(full.end(), mm.begin(), mm.end());
        Poly v = negate ? -b : b;
        auto it = out.find(full);
        if (it == out.end()) {
            if (!v.is_zero()) out.emplace(full, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    rcf_term(c, rest, c->anchor_apply(g, a), out, !negate);
}
} // namespace detail

// u = sum_i e_{m_i} . b_i with coefficients multiplied on the right.
inline std::map<PBWMonomial, Poly> right_coefficient_form(const UEAElement& u) {
    std::map<PBWMonomial, Poly> out;
    for (auto& [m, a] : u.terms) detail::rcf_term(u.ctx, m, a, out, false);
    return out;
}

// Reassemble a right-coefficient list into a canonical element.
inline UEAElement from_right_coefficient_form(const CtxPtr& c,
                                              const std::map<PBWMonomial, Poly>& rc) {
    UEAElement out(c);
    for (auto& [m, b] : rc)
        out += right_mul_poly(UEAElement::monomial(c, m, Poly::constant(c->nvars(), 1)), b);
    return out;
}

// ---------------------------------------------------------------------------
// Tensors
// ---------------------------------------------------------------------------

enum class TensorMode { OverA, OverAop, Plain };

// One tensor leg: a basis element x^alpha e_m of the enveloping algebra.
using TensorSlot = std::pair<ExpVec, PBWMonomial>;

/*
 * Two-leg tensors.  Plain mode performs no balancing; OverA balances
 * a u (x) v = u (x) a v (coefficients migrate right as left coefficients);
 * OverAop balances u t(a) (x) v = u (x) t(a) v (RIGHT coefficients of the
 * first leg migrate, via the right-coefficient form).  In the balanced
 * modes the canonical invariant is: left slot exponent vector is zero.
 *
 * The two legs may live over different algebras (e.g. U(g) (x) U(h)).
 */
class TensorElement {
public:
    TensorMode mode = TensorMode::Plain;
    CtxPtr left_ctx, right_ctx;
    std::map<std::pair<TensorSlot, TensorSlot>, Rational> terms;

    TensorElement() = default;
    TensorElement(TensorMode md, CtxPtr l, CtxPtr r)
        : mode(md), left_ctx(std::move(l)), right_ctx(std::move(r)) {}

    bool is_zero() const { return terms.empty(); }

    void add_term(const TensorSlot& l, const TensorSlot& r, const Rational& c) {
        if (c == 0) return;
        auto key = std::make_pair(l, r);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    // Expand u (x) v bilinearly into basis slots (Plain accumulation).
    void add_product(const UEAElement& u, const UEAElement& v, const Rational& scale = 1) {
        for (auto& [mu, pu] : u.terms)
            for (auto& [eu, cu] : pu.terms)
                for (auto& [mv, pv] : v.terms)
                    for (auto& [ev, cv] : pv.terms)
                        add_term({eu, mu}, {ev, mv}, scale * cu * cv);
    }

    TensorElement& operator+=(const TensorElement& o) {
        for (auto& [k, c] : o.terms) add_term(k.first, k.second, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) {
        for (auto& [k, c] : o.terms) add_term(k.first, k.second, -c);
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

    bool operator==(const TensorElement& o) const { return mode == o.mode && terms == o.terms; }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    UEAElement slot_elem(const CtxPtr& c, const TensorSlot& s, const Rational& coeff) const {
        return UEAElement::monomial(c, s.second, Poly::monomial(c->nvars(), s.first, coeff));
    }

    // Apply UEA-valued maps to each leg; result is Plain.
    TensorElement map_slots(const std::function<UEAElement(const UEAElement&)>& fl,
                            const std::function<UEAElement(const UEAElement&)>& fr,
                            CtxPtr new_left, CtxPtr new_right) const {
        TensorElement out(TensorMode::Plain, new_left, new_right);
        for (auto& [k, c] : terms) {
            UEAElement lu = fl(slot_elem(left_ctx, k.first, 1));
            UEAElement ru = fr(slot_elem(right_ctx, k.second, 1));
            out.add_product(lu, ru, c);
        }
        return out;
    }

    // Multiply the two legs together (both legs must share one algebra).
    UEAElement multiply_out() const {
        UEAElement out(left_ctx);
        for (auto& [k, c] : terms)
            out += uea_mul(slot_elem(left_ctx, k.first, c), slot_elem(right_ctx, k.second, 1));
        return out;
    }

    // Componentwise product (u (x) v)(u' (x) v') = uu' (x) vv' of Plain tensors.
    friend TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
        TensorElement out(TensorMode::Plain, a.left_ctx, a.right_ctx);
        for (auto& [ka, ca] : a.terms)
            for (auto& [kb, cb] : b.terms) {
                UEAElement l = uea_mul(a.slot_elem(a.left_ctx, ka.first, 1),
                                       b.slot_elem(b.left_ctx, kb.first, 1));
                UEAElement r = uea_mul(a.slot_elem(a.right_ctx, ka.second, 1),
                                       b.slot_elem(b.right_ctx, kb.second, 1));
                out.add_product(l, r, ca * cb);
            }
        return out;
    }
};

// Canonicalize into the requested balancing mode.
inline TensorElement tensor_canonicalize(const TensorElement& t, TensorMode mode) {
    if (mode == TensorMode::Plain) {
        TensorElement out = t;
        out.mode = TensorMode::Plain;
        return out;
    }
    TensorElement out(mode, t.left_ctx, t.right_ctx);
    int nl = t.left_ctx->nvars();
    for (auto& [k, c] : t.terms) {
        const auto& [ls, rs] = k;
        if (mode == TensorMode::OverA) {
            // a u (x) v = u (x) a v: move the left-slot coefficient monomial right.
            ExpVec re = rs.first;
            for (int i = 0; i < nl; ++i) re[i] += ls.first[i];
            out.add_term({ExpVec(nl, 0), ls.second}, {re, rs.second}, c);
        } else {
            // OverAop: express the left leg with right coefficients, then
            // migrate those coefficients to the right leg's left position.
            UEAElement lu = t.slot_elem(t.left_ctx, ls, c);
            for (auto& [m, b] : right_coefficient_form(lu))
                for (auto& [eb, cb] : b.terms) {
                    ExpVec re = rs.first;
                    for (int i = 0; i < nl; ++i) re[i] += eb[i];
                    out.add_term({ExpVec(nl, 0), m}, {re, rs.second}, cb);
                }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coproduct
// ---------------------------------------------------------------------------

/*
 * Shuffle coproduct: Delta(a) = a (x) 1 and
 *   Delta(X_1...X_n) = sum over (t, n-t)-shuffles of the two-block split.
 * Choosing a subset of positions for the left block enumerates the shuffles
 * exactly once; both blocks inherit sortedness from the monomial.  Output
 * is OverA-canonical with the coefficient on the right leg.
 */
inline TensorElement coproduct(const UEAElement& u) {
    const CtxPtr& c = u.ctx;
    int n = c->nvars();
    TensorElement out(TensorMode::OverA, c, c);
    for (auto& [m, a] : u.terms) {
        int k = (int)m.size();
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            PBWMonomial left, right;
            for (int t = 0; t < k; ++t)
                ((mask >> t) & 1u ? left : right).push_back(m[t]);
            for (auto& [e, coeff] : a.terms)
                out.add_term({ExpVec(n, 0), left}, {e, right}, coeff);
        }
    }
    return out;
}

// Three-leg tensor (plain representative with coefficients canonically on
// the rightmost leg), as produced by (Delta (x) id) Delta on monomials.
class Tensor3 {
public:
    CtxPtr ctx;
    std::map<std::tuple<TensorSlot, TensorSlot, TensorSlot>, Rational> terms;

    explicit Tensor3(CtxPtr c) : ctx(std::move(c)) {}

    void add_term(const TensorSlot& a, const TensorSlot& b, const TensorSlot& c3,
                  const Rational& r) {
        if (r == 0) return;
        auto key = std::make_tuple(a, b, c3);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, r);
        } else {
            it->second += r;
            if (it->second == 0) terms.erase(it);
        }
    }

    bool operator==(const Tensor3& o) const { return terms == o.terms; }
};

inline Tensor3 iterated_coproduct(const UEAElement& u) {
    const CtxPtr& c = u.ctx;
    int n = c->nvars();
    Tensor3 out(c);
    for (auto& [m, a] : u.terms) {
        int k = (int)m.size();
        // Assign each position to one of three blocks; order within a block
        // is inherited, so this enumerates the double-shuffle terms exactly.
        std::vector<int> assign(k, 0);
        while (true) {
            PBWMonomial b1, b2, b3;
            for (int t = 0; t < k; ++t) (assign[t] == 0 ? b1 : assign[t] == 1 ? b2 : b3).push_back(m[t]);
            for (auto& [e, coeff] : a.terms)
                out.add_term({ExpVec(n, 0), b1}, {ExpVec(n, 0), b2}, {e, b3}, coeff);
            int pos = k - 1;
            while (pos >= 0 && assign[pos] == 2) assign[pos--] = 0;
            if (pos < 0) break;
            ++assign[pos];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Translation map
// ---------------------------------------------------------------------------

/*
 * u -> u_+ (x) u_-, the inverse Hopf-Galois map evaluated at u (x) 1:
 *   a   -> a (x) 1,
 *   X   -> X (x) 1 - 1 (x) X,
 *   uv  -> u_+ v_+ (x) v_- u_-   (note the REVERSED order in the right leg).
 * Output is a Plain representative; assertions about it are made after
 * balanced composition (multiplication or OverAop canonicalization).
 */
inline TensorElement translation_map(const UEAElement& u) {
    const CtxPtr& c = u.ctx;
    int n = c->nvars();
    TensorElement out(TensorMode::Plain, c, c);
    for (auto& [m, a] : u.terms) {
        TensorElement cur(TensorMode::Plain, c, c);
        for (auto& [e, coeff] : a.terms) cur.add_term({e, {}}, {ExpVec(n, 0), {}}, coeff);
        for (int g : m) {
            TensorElement next(TensorMode::Plain, c, c);
            UEAElement gen = UEAElement::generator(c, g);
            for (auto& [k, coeff] : cur.terms) {
                // (s1 e_g) (x) s2  -  s1 (x) (e_g s2)
                UEAElement s1 = cur.slot_elem(c, k.first, 1);
                UEAElement s2 = cur.slot_elem(c, k.second, 1);
                next.add_product(right_mul_gen(s1, g), s2, coeff);
                next.add_product(s1, uea_mul(gen, s2), -coeff);
            }
            cur = std::move(next);
        }
        out += cur;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Functorial pushforward
// ---------------------------------------------------------------------------

// U_A(f) for a certified morphism f: applies f factorwise and renormalizes.
inline UEAElement pushforward(const LRAMorphism& f, const UEAElement& u, const CtxPtr& target) {
    if (!f.is_lie_morphism() || !f.is_anchor_compatible())
        throw std::invalid_argument("pushforward: morphism not certified Lie + anchor-compatible");
    std::vector<UEAElement> gen_images;
    for (int i = 0; i < f.source->rank; ++i) {
        UEAElement gi(target);
        for (int j = 0; j < f.target->rank; ++j)
            if (!f.matrix[i][j].is_zero()) gi.add_term({j}, f.matrix[i][j]);
        gen_images.push_back(gi);
    }
    UEAElement out(target);
    for (auto& [m, a] : u.terms) {
        UEAElement t = UEAElement::from_poly(target, a);
        for (int g : m) t = uea_mul(t, gen_images[g]);
        out += t;
    }
    return out;
}

// All PBW monomials of length exactly k (resp. <= k) over a given rank.
inline void pbw_monomials_of_length(int rank, int k, std::vector<PBWMonomial>& out) {
    PBWMonomial m(k);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            out.push_back(m);
            return;
        }
        for (int g = start; g < rank; ++g) {
            m[pos] = g;
            rec(pos + 1, g);
        }
    };
    rec(0, 0);
}

inline std::vector<PBWMonomial> pbw_monomials_up_to(int rank, int k) {
    std::vector<PBWMonomial> out;
    for (int l = 0; l <= k; ++l) pbw_monomials_of_length(rank, l, out);
    return out;
}

} // namespace lierine
