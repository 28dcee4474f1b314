#include "axbsolve/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "axbsolve/errors.hpp"

namespace axbsolve {

namespace {

thread_local PeakEntriesScope* active_scope = nullptr;

std::string shape_str(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(op) + ": shapes " + shape_str(a) + " and " + shape_str(b) + " differ");
    }
}

}  // namespace

PeakEntriesScope::PeakEntriesScope() : outer_(active_scope) { active_scope = this; }

PeakEntriesScope::~PeakEntriesScope() {
    active_scope = outer_;
    if (outer_ != nullptr) outer_->peak_ = std::max(outer_->peak_, peak_);
}

void note_matrix_entries(std::size_t entries) {
    if (active_scope != nullptr) active_scope->peak_ = std::max(active_scope->peak_, entries);
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    note_matrix_entries(entries_.size());
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw ShapeError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " given " +
                         std::to_string(entries_.size()) + " entries");
    }
    note_matrix_entries(entries_.size());
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("ragged matrix literal");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    note_matrix_entries(entries_.size());
}

Matrix Matrix::identity(std::size_t n) { return rank_normal(n, n, n); }

Matrix Matrix::rank_normal(std::size_t rows, std::size_t cols, std::size_t rank) {
    if (rank > std::min(rows, cols)) throw ShapeError("rank exceeds matrix dimensions");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rank; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::column(std::vector<Rational> entries) {
    const std::size_t n = entries.size();
    return Matrix(n, 1, std::move(entries));
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x.is_zero(); });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range of " + shape_str(*this));
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
    if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_) {
        throw ShapeError("block " + shape_str(src) + " does not fit in " + shape_str(*this));
    }
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j) (*this)(r0 + i, c0 + j) = src(i, j);
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void Matrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "add");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_shape(*this, rhs, "sub");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : entries_) x *= s;
    return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator-(const Matrix& m) { return Rational(-1) * m; }
Matrix operator*(const Rational& s, Matrix m) { return m *= s; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols() != rhs.rows()) {
        throw ShapeError("matmul: " + shape_str(lhs) + " times " + shape_str(rhs));
    }
    Matrix out(lhs.rows(), rhs.cols());
    // i-k-j order skips zero entries of lhs, which dominate permutation and
    // normal-form factors.
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Rational& a = lhs(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) add_product(out(i, j), a, rhs(k, j));
        }
    }
    return out;
}

Matrix block2x2(const Matrix& tl, const Matrix& tr, const Matrix& bl, const Matrix& br) {
    if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() || tr.cols() != br.cols()) {
        throw ShapeError("block2x2: blocks " + shape_str(tl) + ", " + shape_str(tr) + ", " + shape_str(bl) + ", " +
                         shape_str(br) + " do not line up");
    }
    Matrix out(tl.rows() + bl.rows(), tl.cols() + tr.cols());
    out.set_block(0, 0, tl);
    out.set_block(0, tl.cols(), tr);
    out.set_block(tl.rows(), 0, bl);
    out.set_block(tl.rows(), tl.cols(), br);
    return out;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
    if (left.rows() != right.rows()) throw ShapeError("hstack: row counts differ");
    Matrix out(left.rows(), left.cols() + right.cols());
    out.set_block(0, 0, left);
    out.set_block(0, left.cols(), right);
    return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols()) throw ShapeError("vstack: column counts differ");
    Matrix out(top.rows() + bottom.rows(), top.cols());
    out.set_block(0, 0, top);
    out.set_block(top.rows(), 0, bottom);
    return out;
}

}  // namespace axbsolve
