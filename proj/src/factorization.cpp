#include "axbsolve/factorization.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "axbsolve/errors.hpp"

namespace axbsolve {

namespace {

std::optional<std::pair<std::size_t, std::size_t>> first_nonzero(const Matrix& w, std::size_t from) {
    for (std::size_t i = from; i < w.rows(); ++i)
        for (std::size_t j = from; j < w.cols(); ++j)
            if (!w(i, j).is_zero()) return std::pair{i, j};
    return std::nullopt;
}

// row_i -= f * row_src over columns [from, cols)
void sub_row(Matrix& m, std::size_t i, std::size_t src, const Rational& f, std::size_t from = 0) {
    for (std::size_t j = from; j < m.cols(); ++j) {
        if (!m(src, j).is_zero()) m(i, j) -= f * m(src, j);
    }
}

void sub_col(Matrix& m, std::size_t j, std::size_t src, const Rational& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!m(i, src).is_zero()) m(i, j) -= f * m(i, src);
    }
}

void check_block(const Matrix& b, std::size_t rows, std::size_t cols, const char* name) {
    if (b.rows() != rows || b.cols() != cols) {
        throw ShapeError(std::string("Rohde block ") + name + " must be " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", got " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

}  // namespace

RohdeBlocks RohdeBlocks::zero(std::size_t m, std::size_t n, std::size_t a) {
    return {Matrix(a, m - a), Matrix(n - a, a), Matrix(n - a, m - a)};
}

RohdeBlocks RohdeBlocks::random(Rng& rng, std::size_t m, std::size_t n, std::size_t a) {
    return {random_matrix(rng, a, m - a), random_matrix(rng, n - a, a), random_matrix(rng, n - a, m - a)};
}

RankNormalForm rank_normal_form(const Matrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Matrix w = a;
    Matrix q = Matrix::identity(m);
    Matrix p = Matrix::identity(n);

    std::size_t r = 0;
    while (r < std::min(m, n)) {
        const auto pivot = first_nonzero(w, r);
        if (!pivot) break;
        const auto [pi, pj] = *pivot;
        w.swap_rows(r, pi);
        q.swap_rows(r, pi);
        w.swap_cols(r, pj);
        p.swap_cols(r, pj);

        const Rational inv = Rational(1) / w(r, r);
        for (std::size_t j = r; j < n; ++j) w(r, j) *= inv;
        for (std::size_t j = 0; j < m; ++j) q(r, j) *= inv;

        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || w(i, r).is_zero()) continue;
            const Rational f = w(i, r);
            sub_row(w, i, r, f, r);
            sub_row(q, i, r, f);
        }
        // Column r of w is now e_r, so clearing row r to the right only
        // touches w(r, j); P picks up the matching column operations.
        for (std::size_t j = r + 1; j < n; ++j) {
            if (w(r, j).is_zero()) continue;
            const Rational f = w(r, j);
            w(r, j) = 0;
            sub_col(p, j, r, f);
        }
        ++r;
    }
    return {std::move(q), std::move(p), r};
}

bool verify_rank_normal_form(const Matrix& a, const RankNormalForm& f) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (f.q.rows() != m || f.q.cols() != m || f.p.rows() != n || f.p.cols() != n) {
        throw ShapeError("rank normal form factors do not fit a " + std::to_string(m) + "x" + std::to_string(n) +
                         " matrix");
    }
    if (f.rank > std::min(m, n)) return false;
    if (f.q * a * f.p != Matrix::rank_normal(m, n, f.rank)) return false;
    return is_regular(f.q) && is_regular(f.p);
}

Matrix rohde_one_inverse(const RankNormalForm& f, const RohdeBlocks& blocks) {
    const std::size_t m = f.rows();
    const std::size_t n = f.cols();
    const std::size_t a = f.rank;
    if (a > std::min(m, n)) throw ShapeError("rank exceeds factor dimensions");
    check_block(blocks.u, a, m - a, "U");
    check_block(blocks.v, n - a, a, "V");
    check_block(blocks.w, n - a, m - a, "W");
    return f.p * block2x2(Matrix::identity(a), blocks.u, blocks.v, blocks.w) * f.q;
}

bool is_one_inverse(const Matrix& a, const Matrix& g) {
    if (g.rows() != a.cols() || g.cols() != a.rows()) {
        throw ShapeError("candidate {1}-inverse must be " + std::to_string(a.cols()) + "x" + std::to_string(a.rows()));
    }
    return a * g * a == a;
}

std::size_t rank(const Matrix& a) {
    Matrix w = a;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < w.rows() && w(pivot, c).is_zero()) ++pivot;
        if (pivot == w.rows()) continue;
        w.swap_rows(r, pivot);
        for (std::size_t i = r + 1; i < w.rows(); ++i) {
            if (w(i, c).is_zero()) continue;
            const Rational f = w(i, c) / w(r, c);
            sub_row(w, i, r, f, c);
        }
        ++r;
    }
    return r;
}

bool is_regular(const Matrix& a) { return a.is_square() && rank(a) == a.rows(); }

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) throw ShapeError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix w = a;
    Matrix inv = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && w(pivot, c).is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("matrix is singular");
        w.swap_rows(c, pivot);
        inv.swap_rows(c, pivot);
        const Rational s = Rational(1) / w(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            w(c, j) *= s;
            inv(c, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w(i, c).is_zero()) continue;
            const Rational f = w(i, c);
            sub_row(w, i, c, f);
            sub_row(inv, i, c, f);
        }
    }
    return inv;
}

}  // namespace axbsolve
