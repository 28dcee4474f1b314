// Test-only reference computations. Nothing here calls the elimination code
// under test: determinants come from the Leibniz expansion, ranks from
// minors, and linear systems from a separate reduced-row-echelon routine.
#ifndef AXBSOLVE_TESTS_ORACLES_HPP
#define AXBSOLVE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "axbsolve/matrix.hpp"

namespace oracle {

using axbsolve::Matrix;
using axbsolve::Rational;

inline Rational leibniz_det(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rational det = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// Size of the largest square submatrix with nonzero determinant. Small
/// matrices only (exponential).
inline std::size_t minor_rank(const Matrix& m) {
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        std::vector<std::vector<std::size_t>> rows, cols;
        std::vector<std::size_t> cur;
        subsets(m.rows(), k, 0, cur, rows);
        subsets(m.cols(), k, 0, cur, cols);
        for (const auto& r : rows) {
            for (const auto& c : cols) {
                Matrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
                if (!leibniz_det(sub).is_zero()) return k;
            }
        }
    }
    return 0;
}

/// (B^T (x) A) written out entry by entry: row j*m + i, column q*n + p holds
/// B(q, j) * A(i, p).
inline Matrix kron_system(const Matrix& a, const Matrix& b) {
    const std::size_t m = a.rows(), n = a.cols(), k = b.rows(), l = b.cols();
    Matrix s(m * l, n * k);
    for (std::size_t j = 0; j < l; ++j)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t q = 0; q < k; ++q)
                for (std::size_t p = 0; p < n; ++p) s(j * m + i, q * n + p) = b(q, j) * a(i, p);
    return s;
}

inline Matrix column_stack(const Matrix& x) {
    Matrix v(x.rows() * x.cols(), 1);
    std::size_t idx = 0;
    for (std::size_t j = 0; j < x.cols(); ++j)
        for (std::size_t i = 0; i < x.rows(); ++i) v(idx++, 0) = x(i, j);
    return v;
}

struct AffineSolution {
    Matrix particular;             // N x 1
    std::vector<Matrix> nullspace;  // each N x 1
};

/// Solves M x = c by reduction to reduced row echelon form. nullopt when
/// inconsistent.
inline std::optional<AffineSolution> solve_linear(const Matrix& m, const Matrix& c) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix w(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) w(i, j) = m(i, j);
        w(i, cols) = c(i, 0);
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        std::size_t p = r;
        while (p < rows && w(p, j).is_zero()) ++p;
        if (p == rows) continue;
        for (std::size_t t = 0; t <= cols; ++t) std::swap(w(r, t), w(p, t));
        const Rational inv = Rational(1) / w(r, j);
        for (std::size_t t = 0; t <= cols; ++t) w(r, t) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || w(i, j).is_zero()) continue;
            const Rational f = w(i, j);
            for (std::size_t t = 0; t <= cols; ++t) w(i, t) -= f * w(r, t);
        }
        pivots.push_back(j);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!w(i, cols).is_zero()) return std::nullopt;

    AffineSolution sol{Matrix(cols, 1), {}};
    for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular(pivots[i], 0) = w(i, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Matrix v(cols, 1);
        v(f, 0) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v(pivots[i], 0) = -w(i, f);
        sol.nullspace.push_back(v);
    }
    return sol;
}

inline std::size_t rref_rank(const Matrix& m) {
    const auto sol = solve_linear(m, Matrix(m.rows(), 1));
    return m.cols() - sol->nullspace.size();
}

}  // namespace oracle

#endif  // AXBSOLVE_TESTS_ORACLES_HPP
