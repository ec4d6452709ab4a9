/*
 * lie_rinehart.hpp
 * ----------------
 * Lie-Rinehart algebras (A, g, omega) as finite structure data.
 *
 * g is a FREE A-module of rank m with a chosen ordered basis e_1..e_m,
 * a bracket table [e_i, e_j] = sum_k c_ijk e_k with polynomial structure
 * coefficients, and an anchor table omega(e_i) in der(A).  The bracket is
 * extended to arbitrary elements antisymmetrically and by the Leibniz rule
 *     [X, a Y] = a [X, Y] + omega(X)(a) Y.
 *
 * This header also provides: validation (Jacobi + anchor morphism),
 * morphisms, connections with curvature, alternating cochains with the
 * exterior covariant derivative (degrees <= 2), curved semi-direct sums,
 * transformation algebras, and splitting classification.
 */
#pragma once

#include "derivation.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace lierine {

// Coefficient vector of an element of the free module, entries in A.
using ModuleVec = std::vector<Poly>;

class LieRinehartAlgebra {
public:
    int nvars = 0; // variable count of A
    int rank = 0;  // rank m of the free module
    std::vector<std::string> labels;                    // basis names e_1..e_m
    std::vector<std::string> var_names;                 // base variable display names
    std::vector<std::vector<ModuleVec>> bracket_table;  // [i][j][k] = c_ijk
    std::vector<Derivation> anchor_table;               // anchor_table[i] = omega(e_i)

    LieRinehartAlgebra() = default;
    LieRinehartAlgebra(int n, std::vector<std::string> basis_labels)
        : nvars(n), rank((int)basis_labels.size()), labels(std::move(basis_labels)) {
        bracket_table.assign(rank, std::vector<ModuleVec>(rank, zero_vec()));
        anchor_table.assign(rank, Derivation(nvars));
        for (int i = 0; i < nvars; ++i) var_names.push_back("x" + std::to_string(i + 1));
    }

    ModuleVec zero_vec() const { return ModuleVec(rank, Poly(nvars)); }

    ModuleVec basis_vec(int i) const {
        ModuleVec v = zero_vec();
        v[i] = Poly::constant(nvars, 1);
        return v;
    }

    // Set [e_i, e_j] (and its antisymmetric mirror).
    void set_bracket(int i, int j, const ModuleVec& value) {
        bracket_table[i][j] = value;
        ModuleVec neg(rank, Poly(nvars));
        for (int k = 0; k < rank; ++k) neg[k] = -value[k];
        bracket_table[j][i] = neg;
    }

    void set_anchor(int i, const Derivation& d) { anchor_table[i] = d; }

    // Anchor of a general element sum_i f_i e_i: sum_i f_i omega(e_i).
    Derivation anchor_of(const ModuleVec& v) const {
        Derivation d(nvars);
        for (int i = 0; i < rank; ++i)
            if (!v[i].is_zero()) d += v[i] * anchor_table[i];
        return d;
    }

    // Bracket of general elements via bilinearity + Leibniz:
    // [sum f_i e_i, sum g_j e_j] =
    //   sum_ij f_i g_j [e_i,e_j] + f_i omega(e_i)(g_j) e_j - g_j omega(e_j)(f_i) e_i.
    ModuleVec bracket(const ModuleVec& u, const ModuleVec& v) const {
        ModuleVec r = zero_vec();
        for (int i = 0; i < rank; ++i) {
            if (u[i].is_zero()) continue;
            for (int j = 0; j < rank; ++j) {
                if (!v[j].is_zero()) {
                    Poly fg = u[i] * v[j];
                    for (int k = 0; k < rank; ++k) r[k] += fg * bracket_table[i][j][k];
                    r[j] += u[i] * anchor_table[i].apply(v[j]);
                }
            }
        }
        for (int j = 0; j < rank; ++j) {
            if (v[j].is_zero()) continue;
            for (int i = 0; i < rank; ++i)
                if (!u[i].is_zero()) r[i] -= v[j] * anchor_table[j].apply(u[i]);
        }
        return r;
    }

    bool has_zero_anchor() const {
        for (auto& d : anchor_table)
            if (!d.is_zero()) return false;
        return true;
    }
};

using LRAPtr = std::shared_ptr<const LieRinehartAlgebra>;

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        valid = false;
        failures.push_back(std::move(msg));
    }
};

// Check antisymmetry, the Jacobi identity on all basis triples (with the
// forced Leibniz extension), and that the anchor is a Lie algebra morphism.
inline ValidationReport validate_lra(const LieRinehartAlgebra& L) {
    ValidationReport rep;
    for (int i = 0; i < L.rank; ++i)
        for (int j = 0; j < L.rank; ++j) {
            ModuleVec lhs = L.bracket(L.basis_vec(i), L.basis_vec(j));
            for (int k = 0; k < L.rank; ++k)
                if (lhs[k] != L.bracket_table[i][j][k])
                    rep.fail("bracket table not antisymmetrically consistent at (" +
                             L.labels[i] + "," + L.labels[j] + ")");
        }
    // Jacobi: [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0.
    for (int i = 0; i < L.rank; ++i)
        for (int j = i + 1; j < L.rank; ++j)
            for (int k = j + 1; k < L.rank; ++k) {
                ModuleVec ei = L.basis_vec(i), ej = L.basis_vec(j), ek = L.basis_vec(k);
                ModuleVec s = L.bracket(ei, L.bracket(ej, ek));
                ModuleVec t = L.bracket(ej, L.bracket(ek, ei));
                ModuleVec u = L.bracket(ek, L.bracket(ei, ej));
                for (int l = 0; l < L.rank; ++l)
                    if (!(s[l] + t[l] + u[l]).is_zero()) {
                        rep.fail("Jacobi fails on (" + L.labels[i] + "," + L.labels[j] + "," +
                                 L.labels[k] + ")");
                        break;
                    }
            }
    // Anchor is a Lie morphism: omega([e_i,e_j]) = [omega(e_i), omega(e_j)].
    for (int i = 0; i < L.rank; ++i)
        for (int j = i + 1; j < L.rank; ++j) {
            Derivation lhs = L.anchor_of(L.bracket_table[i][j]);
            Derivation rhs = derivation_bracket(L.anchor_table[i], L.anchor_table[j]);
            if (lhs != rhs)
                rep.fail("anchor not a Lie morphism on (" + L.labels[i] + "," + L.labels[j] + ")");
        }
    return rep;
}

/*
 * A-linear morphism between Lie-Rinehart algebras over the same base A,
 * given by its matrix on the basis: f(e_i) = sum_j matrix[i][j] e'_j.
 */
class LRAMorphism {
public:
    LRAPtr source, target;
    std::vector<ModuleVec> matrix; // matrix[i] = image of e_i as a target coefficient vector

    LRAMorphism() = default;
    LRAMorphism(LRAPtr src, LRAPtr tgt, std::vector<ModuleVec> m)
        : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
        if ((int)matrix.size() != source->rank) throw std::invalid_argument("LRAMorphism shape");
        for (auto& row : matrix)
            if ((int)row.size() != target->rank) throw std::invalid_argument("LRAMorphism shape");
    }

    static LRAMorphism identity(const LRAPtr& a) {
        std::vector<ModuleVec> m;
        for (int i = 0; i < a->rank; ++i) m.push_back(a->basis_vec(i));
        return LRAMorphism(a, a, m);
    }

    ModuleVec apply(const ModuleVec& v) const {
        ModuleVec r = target->zero_vec();
        for (int i = 0; i < source->rank; ++i)
            if (!v[i].is_zero())
                for (int j = 0; j < target->rank; ++j) r[j] += v[i] * matrix[i][j];
        return r;
    }

    // Bracket-preserving on basis pairs (with the extended target bracket).
    bool is_lie_morphism() const {
        for (int i = 0; i < source->rank; ++i)
            for (int j = i + 1; j < source->rank; ++j) {
                ModuleVec lhs = apply(source->bracket_table[i][j]);
                ModuleVec rhs = target->bracket(matrix[i], matrix[j]);
                if (lhs != rhs) return false;
            }
        return true;
    }

    // omega_target(f(e_i)) = omega_source(e_i).
    bool is_anchor_compatible() const {
        for (int i = 0; i < source->rank; ++i)
            if (target->anchor_of(matrix[i]) != source->anchor_table[i]) return false;
        return true;
    }
};

// Composition g . f.
inline LRAMorphism compose(const LRAMorphism& g, const LRAMorphism& f) {
    std::vector<ModuleVec> m;
    for (int i = 0; i < f.source->rank; ++i) m.push_back(g.apply(f.matrix[i]));
    return LRAMorphism(f.source, g.target, m);
}

inline bool is_identity(const LRAMorphism& f) {
    if (f.source->rank != f.target->rank) return false;
    for (int i = 0; i < f.source->rank; ++i)
        if (f.matrix[i] != f.target->basis_vec(i)) return false;
    return true;
}

/*
 * Left (A, h)-connection on a free A-module of rank r:
 *     nabla_{a X} = a nabla_X,     nabla_X(a n) = X(a) n + a nabla_X n.
 * Stored as one r x r matrix per basis element X_i of h, columns =
 * images of the module basis: nabla_{X_i}(n_j) = sum_k mat[i][k][j] n_k.
 */
class Connection {
public:
    LRAPtr acting; // (A, h)
    int module_rank = 0;
    std::vector<std::vector<std::vector<Poly>>> mats; // mats[i][row][col]

    Connection() = default;
    Connection(LRAPtr h, int r)
        : acting(std::move(h)), module_rank(r),
          mats(acting->rank,
               std::vector<std::vector<Poly>>(r, std::vector<Poly>(r, Poly(acting->nvars)))) {}

    // nabla_{X_i} applied to a coefficient vector.
    ModuleVec apply_basis(int i, const ModuleVec& n) const {
        int r = module_rank;
        ModuleVec out(r, Poly(acting->nvars));
        for (int j = 0; j < r; ++j) {
            if (n[j].is_zero()) continue;
            out[j] += acting->anchor_table[i].apply(n[j]);
            for (int k = 0; k < r; ++k) out[k] += n[j] * mats[i][k][j];
        }
        return out;
    }

    // nabla_X for X = sum f_i X_i (A-linear in X).
    ModuleVec apply(const ModuleVec& X, const ModuleVec& n) const {
        int r = module_rank;
        ModuleVec out(r, Poly(acting->nvars));
        for (int i = 0; i < acting->rank; ++i) {
            if (X[i].is_zero()) continue;
            ModuleVec part = apply_basis(i, n);
            for (int k = 0; k < r; ++k) out[k] += X[i] * part[k];
        }
        return out;
    }
};

// Curvature Omega(X_i, X_j) = nabla_i nabla_j - nabla_j nabla_i - nabla_{[X_i,X_j]}
// as an r x r matrix (A-linear operator on the module).
inline std::vector<std::vector<Poly>> curvature(const Connection& nab, int i, int j) {
    const auto& h = *nab.acting;
    if (i < 0 || i >= h.rank || j < 0 || j >= h.rank)
        throw std::out_of_range("curvature basis index");
    int r = nab.module_rank;
    std::vector<std::vector<Poly>> om(r, std::vector<Poly>(r, Poly(h.nvars)));
    for (int col = 0; col < r; ++col) {
        ModuleVec n(r, Poly(h.nvars));
        n[col] = Poly::constant(h.nvars, 1);
        ModuleVec v = nab.apply_basis(i, nab.apply_basis(j, n));
        ModuleVec w = nab.apply_basis(j, nab.apply_basis(i, n));
        // [X_i, X_j] = sum_l c_l X_l, and nabla is A-linear in the lower slot,
        // so nabla_{[X_i,X_j]} n_col = sum_l c_l * nabla_{X_l} n_col.
        ModuleVec z(r, Poly(h.nvars));
        for (int l = 0; l < h.rank; ++l) {
            const Poly& c = h.bracket_table[i][j][l];
            if (c.is_zero()) continue;
            ModuleVec part = nab.apply_basis(l, n);
            for (int k = 0; k < r; ++k) z[k] += c * part[k];
        }
        for (int row = 0; row < r; ++row) om[row][col] = v[row] - w[row] - z[row];
    }
    return om;
}

/*
 * Alternating A-multilinear k-cochain on h with values in a free rank-r
 * module, stored on strictly increasing basis tuples.  Degrees 0..3 can be
 * stored; the exterior covariant derivative accepts inputs of degree <= 2.
 */
class Cochain {
public:
    int degree = 0;
    LRAPtr h;
    int module_rank = 0;
    // key: strictly increasing tuple of basis indices (empty for degree 0)
    std::map<std::vector<int>, ModuleVec> values;

    Cochain() = default;
    Cochain(int deg, LRAPtr alg, int r) : degree(deg), h(std::move(alg)), module_rank(r) {}

    ModuleVec zero() const { return ModuleVec(module_rank, Poly(h->nvars)); }

    ModuleVec value_on(std::vector<int> idx) const {
        // Evaluate on a basis tuple, applying the alternating sign.
        int sign = 1;
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = a + 1; b < idx.size(); ++b) {
                if (idx[a] == idx[b]) return zero();
                if (idx[a] > idx[b]) {
                    std::swap(idx[a], idx[b]);
                    sign = -sign;
                }
            }
        auto it = values.find(idx);
        if (it == values.end()) return zero();
        ModuleVec r = it->second;
        if (sign < 0)
            for (auto& p : r) p = -p;
        return r;
    }

    // A-linear evaluation in one argument slot on sum_l c_l X_l, other
    // arguments on basis.
    ModuleVec value_linear(const std::vector<int>& fixed, const ModuleVec& arg,
                           size_t slot) const {
        ModuleVec out = zero();
        for (int l = 0; l < h->rank; ++l) {
            if (arg[l].is_zero()) continue;
            std::vector<int> idx = fixed;
            idx.insert(idx.begin() + slot, l);
            ModuleVec part = value_on(idx);
            for (int k = 0; k < module_rank; ++k) out[k] += arg[l] * part[k];
        }
        return out;
    }
};

/*
 * Exterior covariant derivative (the de Rham-Chevalley-Eilenberg-Rinehart
 * differential with the module action given by a connection):
 *
 *   D alpha(X^1..X^{n+1}) = sum_i (-1)^{i-1} nabla_{X^i} alpha(..X^i-hat..)
 *                         + sum_{i<j} (-1)^{i+j} alpha([X^i,X^j], ..both-hats..).
 *
 * Supported for deg(alpha) <= 2 only; the shipped constructions need no more.
 */
inline Cochain exterior_covariant_derivative(const Cochain& alpha, const Connection& nab) {
    if (alpha.degree > 2) throw std::invalid_argument("exterior_covariant_derivative: degree > 2 unsupported");
    if (alpha.module_rank != nab.module_rank || alpha.h != nab.acting)
        throw std::invalid_argument("exterior_covariant_derivative: cochain/connection mismatch");
    const auto& h = *alpha.h;
    Cochain out(alpha.degree + 1, alpha.h, alpha.module_rank);
    // Enumerate strictly increasing (degree+1)-tuples.
    std::vector<int> idx(alpha.degree + 1);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == (int)idx.size()) {
            ModuleVec val = out.zero();
            int n1 = (int)idx.size();
            for (int i = 0; i < n1; ++i) {
                std::vector<int> rest;
                for (int t = 0; t < n1; ++t)
                    if (t != i) rest.push_back(idx[t]);
                ModuleVec inner = alpha.value_on(rest);
                ModuleVec nv = nab.apply_basis(idx[i], inner);
                int sign = (i % 2 == 0) ? 1 : -1; // (-1)^{i-1} with 1-based i
                for (int k = 0; k < out.module_rank; ++k)
                    val[k] += (sign > 0 ? nv[k] : -nv[k]);
            }
            for (int i = 0; i < n1; ++i)
                for (int j = i + 1; j < n1; ++j) {
                    std::vector<int> rest;
                    for (int t = 0; t < n1; ++t)
                        if (t != i && t != j) rest.push_back(idx[t]);
                    // alpha([X_i, X_j], rest...) with A-linear first slot.
                    ModuleVec br = h.bracket_table[idx[i]][idx[j]];
                    ModuleVec part = alpha.value_linear(rest, br, 0);
                    int sign = ((i + 1 + j + 1) % 2 == 0) ? 1 : -1;
                    for (int k = 0; k < out.module_rank; ++k)
                        val[k] += (sign > 0 ? part[k] : -part[k]);
                }
            bool nonzero = false;
            for (auto& p : val)
                if (!p.is_zero()) nonzero = true;
            if (nonzero) out.values[idx] = val;
            return;
        }
        for (int v = start; v < h.rank; ++v) {
            idx[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
    return out;
}

/*
 * Antisymmetric A-bilinear 2-form tau on h with values in the rank-r module,
 * stored as a Cochain of degree 2 (kept as its own name to match its role
 * as a Lie 2-cocycle).
 */
using LieCocycle = Cochain;

inline LieCocycle make_lie_cocycle(const LRAPtr& h, int module_rank) {
    return Cochain(2, h, module_rank);
}

/*
 * Curved semi-direct sum n x_tau h.
 *
 * Preconditions (verified): n has zero anchor; D tau = 0; and the curvature
 * condition Omega(X_i, X_j) = [tau(X_i,X_j), -]_n on all basis pairs.
 * Bracket on the sum (n first, h second):
 *   [(n,X), (m,Y)] = ([n,m] + nabla_X m - nabla_Y n + tau(X,Y), [X,Y]),
 * anchor (n,X) -> omega_h(X).
 */
struct CurvedSumResult {
    bool ok = false;
    std::string error;
    std::shared_ptr<LieRinehartAlgebra> algebra;
};

inline CurvedSumResult curved_semidirect_sum(const LRAPtr& n, const LRAPtr& h,
                                             const Connection& nab, const LieCocycle& tau) {
    CurvedSumResult res;
    if (!n->has_zero_anchor()) {
        res.error = "n must have zero anchor";
        return res;
    }
    if (nab.module_rank != n->rank || tau.module_rank != n->rank || tau.h != h ||
        nab.acting != h || n->nvars != h->nvars) {
        res.error = "shape mismatch between n, h, connection, tau";
        return res;
    }
    // Closedness D tau = 0.
    Cochain dtau = exterior_covariant_derivative(tau, nab);
    if (!dtau.values.empty()) {
        res.error = "D tau != 0";
        return res;
    }
    // Curvature condition: Omega(X_i,X_j) = [tau(X_i,X_j), -]_n.
    for (int i = 0; i < h->rank; ++i)
        for (int j = i + 1; j < h->rank; ++j) {
            auto om = curvature(nab, i, j);
            ModuleVec t = tau.value_on({i, j});
            for (int col = 0; col < n->rank; ++col) {
                ModuleVec ad = n->bracket(t, n->basis_vec(col));
                for (int row = 0; row < n->rank; ++row)
                    if (om[row][col] != ad[row]) {
                        res.error = "curvature condition fails at basis pair (" +
                                    h->labels[i] + "," + h->labels[j] + ")";
                        return res;
                    }
            }
        }
    // Assemble the sum.
    std::vector<std::string> labels = n->labels;
    labels.insert(labels.end(), h->labels.begin(), h->labels.end());
    auto g = std::make_shared<LieRinehartAlgebra>(n->nvars, labels);
    int mn = n->rank;
    auto embed_n = [&](const ModuleVec& v) {
        ModuleVec r = g->zero_vec();
        for (int k = 0; k < mn; ++k) r[k] = v[k];
        return r;
    };
    for (int i = 0; i < mn; ++i)
        for (int j = i + 1; j < mn; ++j) g->set_bracket(i, j, embed_n(n->bracket_table[i][j]));
    for (int i = 0; i < h->rank; ++i) {
        for (int j = 0; j < mn; ++j) {
            // [X_i, n_j] = nabla_{X_i} n_j.
            ModuleVec col(mn, Poly(n->nvars));
            for (int k = 0; k < mn; ++k) col[k] = nab.mats[i][k][j];
            g->set_bracket(mn + i, j, embed_n(col));
        }
        g->set_anchor(mn + i, h->anchor_table[i]);
        for (int j = i + 1; j < h->rank; ++j) {
            ModuleVec val = embed_n(tau.value_on({i, j}));
            for (int k = 0; k < h->rank; ++k) val[mn + k] = h->bracket_table[i][j][k];
            g->set_bracket(mn + i, mn + j, val);
        }
    }
    auto rep = validate_lra(*g);
    if (!rep.valid) {
        res.error = "constructed sum failed validation: " + rep.failures.front();
        return res;
    }
    res.ok = true;
    res.algebra = g;
    return res;
}

/*
 * Transformation Lie-Rinehart algebra A x h for a finite-dimensional Lie
 * algebra h over Q (rational structure constants) acting on A by
 * derivations.  Basis 1 (x) v_i; bracket
 *   [f (x) v, g (x) w] = fg (x) [v,w] + f v#(g) (x) w - g w#(f) (x) v,
 * anchor f (x) v -> f v#.
 */
struct TransformationResult {
    bool ok = false;
    std::string error;
    std::shared_ptr<LieRinehartAlgebra> algebra;
};

inline TransformationResult transformation_lra(int nvars,
                                               const std::vector<std::string>& h_labels,
                                               const std::vector<std::vector<std::vector<Rational>>>& h_struct,
                                               const std::vector<Derivation>& action) {
    TransformationResult res;
    int m = (int)h_labels.size();
    if ((int)action.size() != m) {
        res.error = "action arity mismatch";
        return res;
    }
    // The action must be a Lie algebra morphism h -> der(A) on basis pairs.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Derivation lhs(nvars);
            for (int k = 0; k < m; ++k)
                lhs += Poly::constant(nvars, h_struct[i][j][k]) * action[k];
            if (lhs != derivation_bracket(action[i], action[j])) {
                res.error = "action is not a Lie algebra morphism at (" + h_labels[i] + "," +
                            h_labels[j] + ")";
                return res;
            }
        }
    auto g = std::make_shared<LieRinehartAlgebra>(nvars, h_labels);
    for (int i = 0; i < m; ++i) {
        g->set_anchor(i, action[i]);
        for (int j = i + 1; j < m; ++j) {
            ModuleVec v = g->zero_vec();
            for (int k = 0; k < m; ++k) v[k] = Poly::constant(nvars, h_struct[i][j][k]);
            g->set_bracket(i, j, v);
        }
    }
    auto rep = validate_lra(*g);
    if (!rep.valid) {
        res.error = "transformation algebra failed validation: " + rep.failures.front();
        return res;
    }
    res.ok = true;
    res.algebra = g;
    return res;
}

/*
 * Splitting classification for a surjection pi: g -> h and a candidate
 * section gamma: h -> g (Prop.-style equivalences C/S):
 *   - NotSection:        pi . gamma != id;
 *   - ALinearSection:    a plain A-linear section;
 *   - LieRinehartSection: additionally a Lie morphism with
 *                         omega_g . gamma = omega_h.
 */
enum class SplittingClass { NotSection, ALinearSection, LieRinehartSection };

inline SplittingClass check_splitting(const LRAMorphism& pi, const LRAMorphism& gamma) {
    if (gamma.source != pi.target || gamma.target != pi.source)
        throw std::invalid_argument("check_splitting: shape mismatch");
    if (!is_identity(compose(pi, gamma))) return SplittingClass::NotSection;
    if (gamma.is_lie_morphism() && gamma.is_anchor_compatible())
        return SplittingClass::LieRinehartSection;
    return SplittingClass::ALinearSection;
}

// Extract (rho, tau) from an A-linear section gamma of pi: g -> h:
//   rho(X) = [gamma(X), -] restricted to ker pi,  tau(X,Y) = [gX,gY] - g[X,Y].
// Used by the round-trip property test for the semi-direct construction.
inline void section_to_data(const LRAMorphism& pi, const LRAMorphism& gamma,
                            const std::vector<int>& kernel_basis, Connection& rho_out,
                            LieCocycle& tau_out) {
    auto g = pi.source;
    auto h = pi.target;
    int r = (int)kernel_basis.size();
    rho_out = Connection(h, r);
    tau_out = make_lie_cocycle(h, r);
    auto to_kernel_coords = [&](const ModuleVec& v) {
        ModuleVec out(r, Poly(g->nvars));
        for (int a = 0; a < r; ++a) out[a] = v[kernel_basis[a]];
        return out;
    };
    for (int i = 0; i < h->rank; ++i) {
        for (int a = 0; a < r; ++a) {
            ModuleVec br = g->bracket(gamma.matrix[i], g->basis_vec(kernel_basis[a]));
            ModuleVec col = to_kernel_coords(br);
            for (int k = 0; k < r; ++k) rho_out.mats[i][k][a] = col[k];
        }
        for (int j = i + 1; j < h->rank; ++j) {
            ModuleVec br = g->bracket(gamma.matrix[i], gamma.matrix[j]);
            ModuleVec corr = gamma.apply(h->bracket_table[i][j]);
            for (int k = 0; k < g->rank; ++k) br[k] -= corr[k];
            ModuleVec val = to_kernel_coords(br);
            bool nz = false;
            for (auto& p : val)
                if (!p.is_zero()) nz = true;
            if (nz) tau_out.values[{i, j}] = val;
        }
    }
}

} // namespace lierine
