#ifndef AXBSOLVE_RANDOM_HPP
#define AXBSOLVE_RANDOM_HPP

#include <cstddef>
#include <random>

#include "axbsolve/matrix.hpp"

namespace axbsolve {

using Rng = std::mt19937_64;

/// Integer entries uniform in [lo, hi]; each entry is forced to zero with
/// probability zero_prob first.
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo = -3, long hi = 3, double zero_prob = 0.0);

/// Random invertible n x n matrix with small integer entries (rejection sampled).
Matrix random_regular(Rng& rng, std::size_t n, long lo = -3, long hi = 3);

/// A random rows x cols matrix of exactly the given rank: E_rank sandwiched
/// between two random regular factors.
Matrix random_of_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t rank);

/// Integer entries in [lo, hi] with a random sparsity level and an occasional
/// duplicated (possibly negated) row or column, so rank deficiency is common
/// while entries stay in range.
Matrix random_small_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo = -3, long hi = 3);

}  // namespace axbsolve

#endif  // AXBSOLVE_RANDOM_HPP
