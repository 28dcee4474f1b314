// Worked examples: coefficient matrices, the published normal-form
// witnesses, and the published solutions as constant + coefficient matrices.
#ifndef AXBSOLVE_TESTS_FIXTURES_HPP
#define AXBSOLVE_TESTS_FIXTURES_HPP

#include <cstddef>
#include <random>

#include "axbsolve/factorization.hpp"
#include "axbsolve/matrix.hpp"
#include "axbsolve/parametric.hpp"
#include "axbsolve/random.hpp"

namespace fixtures {

using axbsolve::Matrix;
using axbsolve::ParametricMatrix;
using axbsolve::RankNormalForm;

// The first two worked examples share A, B, C.
inline const Matrix ex1_a{{1, 2}, {0, 1}, {1, 1}};
inline const Matrix ex1_b{{1, 0, 0}, {0, 1, 1}, {1, 1, 1}};
inline const Matrix ex1_c{{-3, -6, -6}, {-1, -2, -2}, {-2, -4, -4}};
inline const RankNormalForm ex1_fa{Matrix{{1, 0, 0}, {0, 1, 0}, {-1, 1, 1}}, Matrix{{1, -2}, {0, 1}}, 2};
inline const RankNormalForm ex1_fb{Matrix{{1, 0, 0}, {0, 1, 0}, {-1, -1, 1}}, Matrix{{1, 0, 0}, {0, 1, -1}, {0, 0, 1}},
                                   2};

/// X = [[-1-a1+2a2, -2-a1+2a2, a1-2a2], [-1-a2, -2-a2, a2]]
inline ParametricMatrix ex2_solution() {
    return ParametricMatrix(Matrix{{-1, -2, 0}, {-1, -2, 0}},
                            {{"p1", Matrix{{-1, -1, 1}, {0, 0, 0}}}, {"p2", Matrix{{2, 2, -2}, {-1, -1, 1}}}});
}

inline const Matrix ex3_a{{1, 3, 2}, {2, 6, 4}, {1, 3, 2}};
inline const Matrix ex3_b{{1, -3}, {-2, 6}};
inline const Matrix ex3_c{{2, -6}, {4, -12}, {2, -6}};
inline const RankNormalForm ex3_fa{Matrix{{1, 0, 0}, {-2, 1, 0}, {-1, 0, 1}}, Matrix{{1, -3, -2}, {0, 1, 0}, {0, 0, 1}},
                                   1};
inline const RankNormalForm ex3_fb{Matrix{{1, 0}, {2, 1}}, Matrix{{1, 3}, {0, 1}}, 1};

/// [[2+2al-3b1-2b2-6g1-4g2, al-3g1-2g2], [b1+2g1, g1], [b2+2g2, g2]], with
/// parameters in the order alpha, beta_1, beta_2, gamma_1, gamma_2.
inline ParametricMatrix ex3_solution() {
    return ParametricMatrix(Matrix{{2, 0}, {0, 0}, {0, 0}}, {{"p1", Matrix{{2, 1}, {0, 0}, {0, 0}}},
                                                             {"p2", Matrix{{-3, 0}, {1, 0}, {0, 0}}},
                                                             {"p3", Matrix{{-2, 0}, {0, 0}, {1, 0}}},
                                                             {"p4", Matrix{{-6, -3}, {2, 1}, {0, 0}}},
                                                             {"p5", Matrix{{-4, -2}, {0, 0}, {2, 1}}}});
}

/// A random AXB = C instance with dims in [1, max_dim], small entries and
/// C = A * X0 * B, so it is always consistent.
struct Instance {
    Matrix a, b, c, x0;
};

inline Instance random_consistent(axbsolve::Rng& rng, std::size_t max_dim) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    const std::size_t m = dim(rng), n = dim(rng), k = dim(rng), l = dim(rng);
    Instance inst;
    inst.a = axbsolve::random_small_matrix(rng, m, n);
    inst.b = axbsolve::random_small_matrix(rng, k, l);
    inst.x0 = axbsolve::random_matrix(rng, n, k);
    inst.c = inst.a * inst.x0 * inst.b;
    return inst;
}

}  // namespace fixtures

#endif  // AXBSOLVE_TESTS_FIXTURES_HPP
