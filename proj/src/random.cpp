#include "axbsolve/random.hpp"

#include <array>

#include "axbsolve/factorization.hpp"

namespace axbsolve {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi, double zero_prob) {
    std::uniform_int_distribution<long> value(lo, hi);
    std::bernoulli_distribution zero(zero_prob);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = zero(rng) ? 0L : value(rng);
    return m;
}

Matrix random_regular(Rng& rng, std::size_t n, long lo, long hi) {
    while (true) {
        Matrix m = random_matrix(rng, n, n, lo, hi);
        if (rank(m) == n) return m;
    }
}

Matrix random_of_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r) {
    return random_regular(rng, rows, -2, 2) * Matrix::rank_normal(rows, cols, r) * random_regular(rng, cols, -2, 2);
}

Matrix random_small_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    static constexpr std::array<double, 4> densities{0.0, 0.3, 0.6, 0.85};
    std::uniform_int_distribution<std::size_t> pick(0, densities.size() - 1);
    Matrix m = random_matrix(rng, rows, cols, lo, hi, densities[pick(rng)]);

    std::uniform_int_distribution<int> mode(0, 3);
    const int choice = mode(rng);
    const Rational sign = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
    if (choice == 1 && rows >= 2) {
        std::uniform_int_distribution<std::size_t> r(0, rows - 1);
        const std::size_t src = r(rng), dst = r(rng);
        for (std::size_t j = 0; j < cols; ++j) m(dst, j) = sign * m(src, j);
    } else if (choice == 2 && cols >= 2) {
        std::uniform_int_distribution<std::size_t> c(0, cols - 1);
        const std::size_t src = c(rng), dst = c(rng);
        for (std::size_t i = 0; i < rows; ++i) m(i, dst) = sign * m(i, src);
    }
    return m;
}

}  // namespace axbsolve
