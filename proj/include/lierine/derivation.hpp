/*
 * derivation.hpp
 * --------------
 * Derivations of the base algebra A = Q[x_1,...,x_N], i.e. operators
 * D = sum_i d_i d/dx_i with polynomial coefficients.  These carry anchor
 * images, connection actions on coefficients, and Lie algebra actions.
 *
 * The commutator of two derivations is again a derivation; apply()
 * satisfies the Leibniz rule by construction.
 */
#pragma once

#include "poly.hpp"

namespace lierine {

class Derivation {
public:
    int nvars = 0;
    std::vector<Poly> comps; // comps[i] = coefficient of d/dx_i

    Derivation() = default;
    explicit Derivation(int n) : nvars(n), comps(n, Poly(n)) {}
    Derivation(int n, std::vector<Poly> c) : nvars(n), comps(std::move(c)) {
        if ((int)comps.size() != nvars) throw std::invalid_argument("Derivation arity");
    }

    // The coordinate derivation d/dx_i.
    static Derivation coordinate(int n, int i) {
        Derivation d(n);
        d.comps[i] = Poly::constant(n, 1);
        return d;
    }

    bool is_zero() const {
        for (auto& c : comps)
            if (!c.is_zero()) return false;
        return true;
    }

    Poly apply(const Poly& p) const {
        if (p.nvars != nvars) throw std::invalid_argument("Derivation/Poly mismatch");
        Poly r(nvars);
        for (int i = 0; i < nvars; ++i)
            if (!comps[i].is_zero()) r += comps[i] * p.derivative(i);
        return r;
    }

    Derivation& operator+=(const Derivation& o) {
        check(o);
        for (int i = 0; i < nvars; ++i) comps[i] += o.comps[i];
        return *this;
    }
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(const Derivation& a, const Derivation& b) {
        a.check(b);
        Derivation r(a.nvars);
        for (int i = 0; i < a.nvars; ++i) r.comps[i] = a.comps[i] - b.comps[i];
        return r;
    }
    friend Derivation operator*(const Poly& p, const Derivation& d) {
        Derivation r(d.nvars);
        for (int i = 0; i < d.nvars; ++i) r.comps[i] = p * d.comps[i];
        return r;
    }

    bool operator==(const Derivation& o) const { return nvars == o.nvars && comps == o.comps; }
    bool operator!=(const Derivation& o) const { return !(*this == o); }

    void check(const Derivation& o) const {
        if (nvars != o.nvars) throw std::invalid_argument("Derivation variable count mismatch");
    }
};

// [D1, D2](p) = D1(D2 p) - D2(D1 p); computed on coefficients so the result
// is again a first-order operator.
inline Derivation derivation_bracket(const Derivation& d1, const Derivation& d2) {
    d1.check(d2);
    int n = d1.nvars;
    Derivation r(n);
    for (int i = 0; i < n; ++i) r.comps[i] = d1.apply(d2.comps[i]) - d2.apply(d1.comps[i]);
    return r;
}

inline Poly derivation_apply(const Derivation& d, const Poly& p) { return d.apply(p); }

inline Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

} // namespace lierine
