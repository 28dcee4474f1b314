#ifndef AXBSOLVE_MATRIX_HPP
#define AXBSOLVE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "axbsolve/scalar.hpp"

namespace axbsolve {

/// Dense row-major matrix of exact rationals. Zero-row and zero-column shapes
/// are valid values and take part in block assembly like any other.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix identity(std::size_t n);
    /// The rank normal form target: I_rank in the top-left corner, zeros elsewhere.
    static Matrix rank_normal(std::size_t rows, std::size_t cols, std::size_t rank);
    static Matrix column(std::vector<Rational> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Rational> entries() const { return entries_; }
    std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

    bool is_zero() const;
    Matrix transpose() const;

    /// Copy of the rows [r0, r0+nr) and columns [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& src);

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Rational& s);

    friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator-(const Matrix& m);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(const Rational& s, Matrix m);

/// [[tl, tr], [bl, br]]; any block may have zero rows or columns as long as
/// the block rows and block columns line up.
Matrix block2x2(const Matrix& tl, const Matrix& tr, const Matrix& bl, const Matrix& br);
Matrix hstack(const Matrix& left, const Matrix& right);
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// Tracks the largest single matrix (in entries) constructed on the current
/// thread while the scope is alive. Scopes nest; the inner one sees only its
/// own allocations and forwards its peak to the outer scope on exit.
class PeakEntriesScope {
public:
    PeakEntriesScope();
    ~PeakEntriesScope();
    PeakEntriesScope(const PeakEntriesScope&) = delete;
    PeakEntriesScope& operator=(const PeakEntriesScope&) = delete;

    std::size_t peak() const { return peak_; }

private:
    friend void note_matrix_entries(std::size_t);
    PeakEntriesScope* outer_;
    std::size_t peak_ = 0;
};

void note_matrix_entries(std::size_t entries);

}  // namespace axbsolve

#endif  // AXBSOLVE_MATRIX_HPP
