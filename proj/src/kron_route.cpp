#include "axbsolve/kron_route.hpp"

#include <algorithm>
#include <vector>

#include "axbsolve/kron.hpp"

namespace axbsolve {

namespace {

// Indices j*inner + i over j < blocks, i < inner: first those with
// j < moved_blocks and i < moved_inner, then the rest, each run ascending.
std::vector<std::size_t> gather_order(std::size_t inner, std::size_t blocks, std::size_t moved_inner,
                                      std::size_t moved_blocks) {
    std::vector<std::size_t> order;
    order.reserve(inner * blocks);
    for (std::size_t j = 0; j < moved_blocks; ++j)
        for (std::size_t i = 0; i < moved_inner; ++i) order.push_back(j * inner + i);
    for (std::size_t j = 0; j < blocks; ++j)
        for (std::size_t i = 0; i < inner; ++i)
            if (j >= moved_blocks || i >= moved_inner) order.push_back(j * inner + i);
    return order;
}

void check_c(const KronFactorization& kf, const Matrix& c) { check_problem_shapes(kf.a, kf.b, c); }

}  // namespace

Matrix KronFactorization::system_matrix() const { return kron(b.transpose(), a); }

RankNormalForm KronFactorization::system_form() const {
    return {d.apply_rows(kron(fb.p.transpose(), fa.q)), g.apply_cols(kron(fb.q.transpose(), fa.p)), rank()};
}

std::pair<PermutationMatrix, PermutationMatrix> build_permutations(std::size_t m, std::size_t n, std::size_t k,
                                                                   std::size_t l, std::size_t a, std::size_t b) {
    if (a > std::min(m, n) || b > std::min(k, l)) throw ShapeError("build_permutations: rank exceeds dimensions");
    // Rows of E_{B^T} (x) E_A are indexed j*m + i with j < l, i < m; columns j*n + i with j < k, i < n.
    PermutationMatrix d(gather_order(m, l, a, b));
    PermutationMatrix g = PermutationMatrix(gather_order(n, k, a, b)).transpose();
    return {std::move(d), std::move(g)};
}

std::pair<PermutationMatrix, PermutationMatrix> build_permutations(const RankNormalForm& fa, const RankNormalForm& fb,
                                                                   std::size_t m, std::size_t n, std::size_t k,
                                                                   std::size_t l) {
    if (fa.rows() != m || fa.cols() != n || fb.rows() != k || fb.cols() != l) {
        throw ShapeError("build_permutations: factorizations do not match the stated dimensions");
    }
    return build_permutations(m, n, k, l, fa.rank, fb.rank);
}

KronFactorization make_kron_factorization(const Matrix& a, const Matrix& b, const std::optional<RankNormalForm>& fa_in,
                                          const std::optional<RankNormalForm>& fb_in) {
    KronFactorization kf{a, b, resolve_rank_normal_form(a, fa_in), resolve_rank_normal_form(b, fb_in), {}, {}};
    auto [d, g] = build_permutations(kf.fa, kf.fb, a.rows(), a.cols(), b.rows(), b.cols());
    kf.d = std::move(d);
    kf.g = std::move(g);
    return kf;
}

Matrix kron_one_inverse(const KronFactorization& kf, const RohdeBlocks& blocks) {
    return rohde_one_inverse(kf.system_form(), blocks);
}

Matrix transformed_rhs_vector(const KronFactorization& kf, const Matrix& c) {
    check_c(kf, c);
    return kf.d.apply_rows(kron(kf.fb.p.transpose(), kf.fa.q) * vec(c));
}

bool vec_consistency(const KronFactorization& kf, const Matrix& c) {
    const Matrix c2 = transformed_rhs_vector(kf, c);
    return c2.block(kf.rank(), 0, c2.rows() - kf.rank(), 1).is_zero();
}

GeneralSolution kron_general_solution(const KronFactorization& kf, const Matrix& c) {
    const Matrix c2 = transformed_rhs_vector(kf, c);
    const std::size_t ab = kf.rank();
    std::vector<CertificateEntry> cert;
    for (std::size_t i = ab; i < c2.rows(); ++i)
        if (!c2(i, 0).is_zero()) cert.push_back({"c''", i, 0, c2(i, 0)});
    if (!cert.empty()) {
        std::stable_sort(cert.begin(), cert.end(), [](const CertificateEntry& x, const CertificateEntry& y) {
            return abs(x.value.numerator()) > abs(y.value.numerator());
        });
        throw NoSolutionError(std::move(cert));
    }

    const std::size_t n = kf.a.cols();
    const std::size_t k = kf.b.rows();
    const Matrix basis = kf.g.apply_cols(kron(kf.fb.q.transpose(), kf.fa.p));  // (R^T (x) P) * G, nk x nk
    const Matrix constant = basis.block(0, 0, n * k, ab) * c2.block(0, 0, ab, 1);

    std::vector<Parameter> params;
    params.reserve(n * k - ab);
    for (std::size_t t = ab; t < n * k; ++t) {
        params.push_back({"p" + std::to_string(params.size() + 1), unvec(basis.block(0, t, n * k, 1), n, k)});
    }

    GeneralSolution sol;
    sol.param_count = params.size();
    sol.x = ParametricMatrix(unvec(constant, n, k), std::move(params));
    sol.route = Route::kronecker;
    sol.fa = kf.fa;
    sol.fb = kf.fb;
    sol.d = kf.d;
    sol.g = kf.g;
    sol.groups = {{"alpha", sol.param_count}};
    return sol;
}

Matrix kron_penrose_solution(const KronFactorization& kf, const Matrix& c, const Matrix& gk, const Matrix& y) {
    check_c(kf, c);
    const std::size_t n = kf.a.cols();
    const std::size_t k = kf.b.rows();
    if (y.rows() != n * k || y.cols() != 1) throw ShapeError("kron_penrose_solution: y must be an nk x 1 column");
    const Matrix system = kf.system_matrix();
    if (!is_one_inverse(system, gk)) throw InvalidInverseError("kron_penrose_solution: not a {1}-inverse of B^T (x) A");
    const Matrix x = gk * vec(c) + y - gk * (system * y);
    return unvec(x, n, k);
}

}  // namespace axbsolve
