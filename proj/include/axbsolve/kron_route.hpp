#ifndef AXBSOLVE_KRON_ROUTE_HPP
#define AXBSOLVE_KRON_ROUTE_HPP

#include <cstddef>
#include <optional>
#include <utility>

#include "axbsolve/axb_solver.hpp"
#include "axbsolve/factorization.hpp"
#include "axbsolve/permutation.hpp"

namespace axbsolve {

// Solves AXB = C as the explicit linear system (B^T (x) A) vec X = vec C.

/// Normal-form data for the system matrix B^T (x) A built from the factors of
/// A and B: D * (S^T (x) Q) * (B^T (x) A) * (R^T (x) P) * G = E_{B^T (x) A}.
struct KronFactorization {
    Matrix a;  // m x n
    Matrix b;  // k x l
    RankNormalForm fa;
    RankNormalForm fb;
    PermutationMatrix d;  // ml x ml
    PermutationMatrix g;  // nk x nk

    std::size_t rank() const { return fa.rank * fb.rank; }
    /// B^T (x) A, materialized.
    Matrix system_matrix() const;
    /// (D * (S^T (x) Q), (R^T (x) P) * G, ab) as a rank normal form of B^T (x) A.
    RankNormalForm system_form() const;
};

/// D gathers rows {j*m + i : j < b, i < a} of E_{B^T} (x) E_A to the top and G
/// gathers columns {j*n + i : j < b, i < a} to the left. Both keep the moved
/// indices in order, followed by the rest in order.
std::pair<PermutationMatrix, PermutationMatrix> build_permutations(std::size_t m, std::size_t n, std::size_t k,
                                                                   std::size_t l, std::size_t a, std::size_t b);
std::pair<PermutationMatrix, PermutationMatrix> build_permutations(const RankNormalForm& fa, const RankNormalForm& fb,
                                                                   std::size_t m, std::size_t n, std::size_t k,
                                                                   std::size_t l);

/// Injected forms are validated; throws InvalidWitnessError if one is wrong.
KronFactorization make_kron_factorization(const Matrix& a, const Matrix& b,
                                          const std::optional<RankNormalForm>& fa = {},
                                          const std::optional<RankNormalForm>& fb = {});

/// (R^T (x) P) * G * [[I_ab, F], [H, L]] * D * (S^T (x) Q), with F, H, L passed
/// in the RohdeBlocks u, v, w slots.
Matrix kron_one_inverse(const KronFactorization& kf, const RohdeBlocks& blocks);

/// c'' = D * (S^T (x) Q) * vec C.
Matrix transformed_rhs_vector(const KronFactorization& kf, const Matrix& c);

/// True iff the last ml - ab entries of c'' vanish.
bool vec_consistency(const KronFactorization& kf, const Matrix& c);

/// vec X = (R^T (x) P) * G * [head of c''; theta] with theta fresh parameters.
/// Throws NoSolutionError with the nonzero tail of c'' when inconsistent.
GeneralSolution kron_general_solution(const KronFactorization& kf, const Matrix& c);

/// unvec(gk * vec C + (I - gk * (B^T (x) A)) * y). Throws InvalidInverseError
/// if gk is not a {1}-inverse of B^T (x) A.
Matrix kron_penrose_solution(const KronFactorization& kf, const Matrix& c, const Matrix& gk, const Matrix& y);

}  // namespace axbsolve

#endif  // AXBSOLVE_KRON_ROUTE_HPP
