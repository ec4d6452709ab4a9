/*
 * poly.hpp
 * --------
 * Multivariate polynomials over the rationals: the commutative base
 * algebra A = Q[x_1, ..., x_N].
 *
 * A Poly is a finite map exponent-vector -> Rational with no zero
 * coefficients stored.  N = 0 is legal and gives A = Q, which is how the
 * classical Lie algebra examples are modelled.
 *
 * Monomials are ordered graded-lexicographically.  The order only affects
 * printing and iteration determinism, never the algebra.
 */
#pragma once

#include "rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lierine {

using ExpVec = std::vector<int>; // exponent vector, length = variable count

// Graded lexicographic: compare total degree first, then lexicographic.
struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a < b;
    }
};

class Poly {
public:
    int nvars = 0;
    std::map<ExpVec, Rational, GradedLex> terms;

    Poly() = default;
    explicit Poly(int n) : nvars(n) {}

    // Constant polynomial.
    static Poly constant(int n, const Rational& c) {
        Poly p(n);
        if (c != 0) p.terms[ExpVec(n, 0)] = c;
        return p;
    }

    // The variable x_i.
    static Poly variable(int n, int i) {
        if (i < 0 || i >= n) throw std::out_of_range("Poly::variable index");
        Poly p(n);
        ExpVec e(n, 0);
        e[i] = 1;
        p.terms[e] = 1;
        return p;
    }

    static Poly monomial(int n, const ExpVec& e, const Rational& c) {
        if ((int)e.size() != n) throw std::invalid_argument("Poly::monomial exponent length");
        Poly p(n);
        if (c != 0) p.terms[e] = c;
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    bool is_constant() const {
        if (terms.empty()) return true;
        return terms.size() == 1 && total_degree() == 0;
    }

    Rational constant_value() const {
        if (terms.empty()) return 0;
        auto it = terms.find(ExpVec(nvars, 0));
        return it == terms.end() ? Rational(0) : it->second;
    }

    int total_degree() const { // degree of the largest monomial; -1 for 0
        if (terms.empty()) return -1;
        const ExpVec& e = terms.rbegin()->first;
        return std::accumulate(e.begin(), e.end(), 0);
    }

    void add_term(const ExpVec& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_compatible(o);
        for (auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_compatible(o);
        for (auto& [e, c] : o.terms) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r(a.nvars);
        for (auto& [e, c] : a.terms) r.terms[e] = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_compatible(b);
        Poly r(a.nvars);
        for (auto& [ea, ca] : a.terms)
            for (auto& [eb, cb] : b.terms) {
                ExpVec e(a.nvars);
                for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Poly& a, const Rational& c) {
        Poly r(a.nvars);
        if (c == 0) return r;
        for (auto& [e, k] : a.terms) r.terms[e] = k * c;
        return r;
    }
    friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }

    bool operator==(const Poly& o) const { return nvars == o.nvars && terms == o.terms; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const { // arbitrary total order (for map keys)
        if (nvars != o.nvars) return nvars < o.nvars;
        return std::lexicographical_compare(
            terms.begin(), terms.end(), o.terms.begin(), o.terms.end(),
            [](const auto& x, const auto& y) {
                GradedLex gl;
                if (gl(x.first, y.first)) return true;
                if (gl(y.first, x.first)) return false;
                return x.second < y.second;
            });
    }

    // Partial derivative with respect to x_i.
    Poly derivative(int i) const {
        if (i < 0 || i >= nvars) throw std::out_of_range("Poly::derivative index");
        Poly r(nvars);
        for (auto& [e, c] : terms) {
            if (e[i] == 0) continue;
            ExpVec f = e;
            f[i] -= 1;
            r.add_term(f, c * e[i]);
        }
        return r;
    }

    // Substitute values (polynomials over possibly different nvars) for the variables.
    Poly substitute(const std::vector<Poly>& values, int target_nvars) const {
        if ((int)values.size() != nvars) throw std::invalid_argument("Poly::substitute arity");
        Poly r = Poly::constant(target_nvars, 0);
        for (auto& [e, c] : terms) {
            Poly term = Poly::constant(target_nvars, c);
            for (int i = 0; i < nvars; ++i)
                for (int k = 0; k < e[i]; ++k) term = term * values[i];
            r += term;
        }
        return r;
    }

    void check_compatible(const Poly& o) const {
        if (nvars != o.nvars) throw std::invalid_argument("Poly variable count mismatch");
    }

    // Canonical print with the supplied variable names (highest monomial first).
    std::string str(const std::vector<std::string>& names) const {
        if (terms.empty()) return "0";
        std::string out;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational a = c;
            if (!out.empty()) {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            } else if (a < 0) {
                out += "-";
                a = -a;
            }
            std::string mono;
            for (int i = 0; i < nvars; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                out += to_string(a);
            } else {
                if (a != 1) out += to_string(a) + "*";
                out += mono;
            }
        }
        return out;
    }

    std::string str() const {
        std::vector<std::string> names;
        for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
        return str(names);
    }
};

} // namespace lierine
