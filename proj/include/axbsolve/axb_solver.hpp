#ifndef AXBSOLVE_AXB_SOLVER_HPP
#define AXBSOLVE_AXB_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "axbsolve/errors.hpp"
#include "axbsolve/factorization.hpp"
#include "axbsolve/matrix.hpp"
#include "axbsolve/parametric.hpp"
#include "axbsolve/permutation.hpp"

namespace axbsolve {

// Problem: A is m x n, X is n x k, B is k x l, C is m x l.

enum class Route { direct, kronecker };

std::string to_string(Route route);

/// A run of consecutive parameters that share a Greek letter in display names.
struct ParameterGroup {
    std::string letter;
    std::size_t count = 0;
};

/// Complete solution set of AXB = C as an affine family with n*k - a*b free
/// parameters, plus the factorizations that produced it.
struct GeneralSolution {
    ParametricMatrix x;
    std::size_t param_count = 0;
    Route route = Route::direct;
    RankNormalForm fa;  // Q, P for A
    RankNormalForm fb;  // R, S for B
    std::optional<PermutationMatrix> d;  // Kronecker route only
    std::optional<PermutationMatrix> g;
    std::vector<ParameterGroup> groups;
};

/// alpha/beta/gamma style names following the solution's parameter groups:
/// a group of one is "alpha", larger groups are "alpha_1", "alpha_2", ...
std::vector<std::string> greek_parameter_names(const GeneralSolution& sol);

/// Throws ShapeError unless A, B, C are conformable for AXB = C.
void check_problem_shapes(const Matrix& a, const Matrix& b, const Matrix& c);

/// Returns the injected form after validating it against a, or computes one.
/// Throws InvalidWitnessError if the injected form is not valid for a.
RankNormalForm resolve_rank_normal_form(const Matrix& a, const std::optional<RankNormalForm>& injected);

/// C' = Q * C * S.
Matrix transform_rhs(const Matrix& c, const RankNormalForm& fa, const RankNormalForm& fb);

/// Nonzero entries of the C'12, C'21, C'22 blocks (C' coordinates), largest
/// |numerator| first. Empty iff AXB = C is solvable.
std::vector<CertificateEntry> consistency_certificate(const Matrix& c_prime, std::size_t a, std::size_t b);

bool is_consistent(const Matrix& a, const Matrix& b, const Matrix& c, const std::optional<RankNormalForm>& fa = {},
                   const std::optional<RankNormalForm>& fb = {});

/// C == A * ga * C * gb * B. Throws InvalidInverseError if ga or gb is not a
/// {1}-inverse of A or B.
bool penrose_condition(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& ga, const Matrix& gb);

/// X = P * [[C'11, T12], [T21, T22]] * R with the T blocks as fresh
/// parameters p1, p2, ... (T12 row-major, then T21, then T22).
/// Throws NoSolutionError carrying the nonzero off-diagonal blocks of C' when inconsistent.
GeneralSolution general_solution(const Matrix& a, const Matrix& b, const Matrix& c,
                                 const std::optional<RankNormalForm>& fa = {},
                                 const std::optional<RankNormalForm>& fb = {});

/// ga*C*gb + Y - ga*A*Y*B*gb.
Matrix penrose_solution(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& ga, const Matrix& gb,
                        const Matrix& y);

/// True iff some parameter values make x equal x0 (exact rank test).
bool solve_membership(const Matrix& x0, const ParametricMatrix& x);
bool solve_membership(const Matrix& x0, const GeneralSolution& sol);

/// Mutual containment of two affine families, checked on each particular
/// solution and each particular-plus-generator, together with equal
/// parameter counts.
bool same_solution_set(const ParametricMatrix& x, const ParametricMatrix& y);

}  // namespace axbsolve

#endif  // AXBSOLVE_AXB_SOLVER_HPP
