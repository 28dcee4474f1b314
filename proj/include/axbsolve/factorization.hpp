#ifndef AXBSOLVE_FACTORIZATION_HPP
#define AXBSOLVE_FACTORIZATION_HPP

#include <cstddef>

#include "axbsolve/matrix.hpp"
#include "axbsolve/random.hpp"

namespace axbsolve {

/// Regular Q (m x m) and P (n x n) with Q * A * P = E_A, where E_A carries
/// I_rank in its top-left corner. Not unique: treat Q and P as witnesses.
struct RankNormalForm {
    Matrix q;
    Matrix p;
    std::size_t rank = 0;

    std::size_t rows() const { return q.rows(); }  // m
    std::size_t cols() const { return p.rows(); }  // n

    friend bool operator==(const RankNormalForm&, const RankNormalForm&) = default;
};

/// Free blocks of a {1}-inverse in Rohde form P * [[I, U], [V, W]] * Q.
/// For an m x n matrix of rank a: U is a x (m-a), V is (n-a) x a, W is (n-a) x (m-a).
struct RohdeBlocks {
    Matrix u;
    Matrix v;
    Matrix w;

    static RohdeBlocks zero(std::size_t m, std::size_t n, std::size_t a);
    static RohdeBlocks random(Rng& rng, std::size_t m, std::size_t n, std::size_t a);
};

/// Gauss-Jordan elimination with full pivoting, pivot = first nonzero entry
/// of the remaining submatrix in row-major order. Q accumulates the row
/// operations and P the column operations, so both are regular by
/// construction. Deterministic in A.
RankNormalForm rank_normal_form(const Matrix& a);

/// True iff f.q * a * f.p == E_a and both factors are regular.
/// Throws ShapeError if the factor shapes do not fit a.
bool verify_rank_normal_form(const Matrix& a, const RankNormalForm& f);

/// P * [[I_a, U], [V, W]] * Q. Throws ShapeError on block shape mismatch.
Matrix rohde_one_inverse(const RankNormalForm& f, const RohdeBlocks& blocks);

/// True iff a * g * a == a. Throws ShapeError unless g is n x m for a m x n.
bool is_one_inverse(const Matrix& a, const Matrix& g);

/// Exact rank by row reduction.
std::size_t rank(const Matrix& a);

bool is_regular(const Matrix& a);

/// Inverse of a regular square matrix; throws std::domain_error if singular.
Matrix inverse(const Matrix& a);

}  // namespace axbsolve

#endif  // AXBSOLVE_FACTORIZATION_HPP
