/*
 * linalg.hpp
 * ----------
 * Small exact linear algebra utilities:
 *   - Gaussian elimination over Q (rank, nullspace, row reduction),
 *   - fraction-free (Bareiss) determinant over the polynomial ring,
 *     with exact polynomial division.
 * Used for kernel-basis solving, graded rank checks, and unit-determinant
 * certification of filtered isomorphisms.
 */
#pragma once

#include "poly.hpp"

#include <vector>

namespace lierine {

using QMatrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form; returns rank.
inline int rref(QMatrix& m) {
    if (m.empty()) return 0;
    int rows = (int)m.size(), cols = (int)m[0].size();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        Rational inv = m[rank][col];
        for (int c = 0; c < cols; ++c) m[rank][c] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = 0; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

inline int matrix_rank(QMatrix m) { return rref(m); }

// Basis of the right nullspace {x : M x = 0}.
inline std::vector<std::vector<Rational>> nullspace(QMatrix m, int cols) {
    rref(m);
    std::vector<int> pivot_of_col(cols, -1);
    int row = 0;
    for (int col = 0; col < cols && row < (int)m.size(); ++col)
        if (m[row][col] != 0) pivot_of_col[col] = row++;
    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<Rational> v(cols, 0);
        v[free_col] = 1;
        for (int col = 0; col < cols; ++col)
            if (pivot_of_col[col] >= 0) v[col] = -m[pivot_of_col[col]][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Do the rows of `a` and `b` span the same subspace of Q^cols?
inline bool same_row_span(QMatrix a, QMatrix b) {
    int ra = rref(a), rb = rref(b);
    if (ra != rb) return false;
    QMatrix joint = a;
    joint.insert(joint.end(), b.begin(), b.end());
    return rref(joint) == ra;
}

// Exact polynomial division a / b; throws if not exact (internal error in
// Bareiss elimination, where divisibility is guaranteed).
inline Poly poly_divexact(Poly a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divexact: division by zero");
    Poly q(a.nvars);
    const auto& [lbe, lbc] = *b.terms.rbegin(); // graded-lex leading term of b
    while (!a.is_zero()) {
        const auto& [lae, lac] = *a.terms.rbegin();
        ExpVec e(a.nvars);
        for (int i = 0; i < a.nvars; ++i) {
            e[i] = lae[i] - lbe[i];
            if (e[i] < 0) throw std::runtime_error("poly_divexact: not divisible");
        }
        Rational c = lac / lbc;
        q.add_term(e, c);
        a -= b * Poly::monomial(a.nvars, e, c);
    }
    return q;
}

// Bareiss fraction-free determinant of a square Poly matrix.
inline Poly poly_det(std::vector<std::vector<Poly>> m, int nvars) {
    int n = (int)m.size();
    if (n == 0) return Poly::constant(nvars, 1);
    Poly prev = Poly::constant(nvars, 1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return Poly(nvars); // singular
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = poly_divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

} // namespace lierine
