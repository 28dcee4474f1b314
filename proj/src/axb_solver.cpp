#include "axbsolve/axb_solver.hpp"

#include <algorithm>
#include <utility>

#include "axbsolve/kron.hpp"

namespace axbsolve {

namespace {

std::string dims(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void collect_nonzero(const Matrix& cp, const char* block, std::size_t r0, std::size_t r1, std::size_t c0,
                     std::size_t c1, std::vector<CertificateEntry>& out) {
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j)
            if (!cp(i, j).is_zero()) out.push_back({block, i, j, cp(i, j)});
}

}  // namespace

std::string to_string(Route route) { return route == Route::direct ? "direct" : "kron"; }

std::vector<std::string> greek_parameter_names(const GeneralSolution& sol) {
    std::vector<std::string> names;
    for (const auto& group : sol.groups) {
        if (group.count == 1) {
            names.push_back(group.letter);
            continue;
        }
        for (std::size_t i = 1; i <= group.count; ++i) names.push_back(group.letter + "_" + std::to_string(i));
    }
    return names;
}

void check_problem_shapes(const Matrix& a, const Matrix& b, const Matrix& c) {
    if (c.rows() != a.rows() || c.cols() != b.cols()) {
        throw ShapeError("C must be " + std::to_string(a.rows()) + "x" + std::to_string(b.cols()) + " for A " +
                         dims(a) + " and B " + dims(b) + ", got " + dims(c));
    }
}

RankNormalForm resolve_rank_normal_form(const Matrix& a, const std::optional<RankNormalForm>& injected) {
    if (!injected) return rank_normal_form(a);
    bool ok = false;
    try {
        ok = verify_rank_normal_form(a, *injected);
    } catch (const ShapeError& e) {
        throw InvalidWitnessError(std::string("injected witnesses: ") + e.what());
    }
    if (!ok) throw InvalidWitnessError("injected witnesses do not bring the matrix to rank normal form");
    return *injected;
}

Matrix transform_rhs(const Matrix& c, const RankNormalForm& fa, const RankNormalForm& fb) {
    if (fa.q.rows() != c.rows() || fb.p.rows() != c.cols()) {
        throw ShapeError("transform_rhs: factors do not fit C " + dims(c));
    }
    return fa.q * c * fb.p;
}

std::vector<CertificateEntry> consistency_certificate(const Matrix& cp, std::size_t a, std::size_t b) {
    if (a > cp.rows() || b > cp.cols()) throw ShapeError("consistency_certificate: ranks exceed C' dimensions");
    std::vector<CertificateEntry> out;
    collect_nonzero(cp, "C'12", 0, a, b, cp.cols(), out);
    collect_nonzero(cp, "C'21", a, cp.rows(), 0, b, out);
    collect_nonzero(cp, "C'22", a, cp.rows(), b, cp.cols(), out);
    std::stable_sort(out.begin(), out.end(), [](const CertificateEntry& x, const CertificateEntry& y) {
        return abs(x.value.numerator()) > abs(y.value.numerator());
    });
    return out;
}

bool is_consistent(const Matrix& a, const Matrix& b, const Matrix& c, const std::optional<RankNormalForm>& fa_in,
                   const std::optional<RankNormalForm>& fb_in) {
    check_problem_shapes(a, b, c);
    const RankNormalForm fa = resolve_rank_normal_form(a, fa_in);
    const RankNormalForm fb = resolve_rank_normal_form(b, fb_in);
    return consistency_certificate(transform_rhs(c, fa, fb), fa.rank, fb.rank).empty();
}

bool penrose_condition(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& ga, const Matrix& gb) {
    check_problem_shapes(a, b, c);
    if (!is_one_inverse(a, ga)) throw InvalidInverseError("penrose_condition: G_A is not a {1}-inverse of A");
    if (!is_one_inverse(b, gb)) throw InvalidInverseError("penrose_condition: G_B is not a {1}-inverse of B");
    return a * ga * c * gb * b == c;
}

GeneralSolution general_solution(const Matrix& a, const Matrix& b, const Matrix& c,
                                 const std::optional<RankNormalForm>& fa_in,
                                 const std::optional<RankNormalForm>& fb_in) {
    check_problem_shapes(a, b, c);
    RankNormalForm fa = resolve_rank_normal_form(a, fa_in);
    RankNormalForm fb = resolve_rank_normal_form(b, fb_in);
    const std::size_t n = a.cols();
    const std::size_t k = b.rows();
    const std::size_t ra = fa.rank;
    const std::size_t rb = fb.rank;

    const Matrix cp = transform_rhs(c, fa, fb);
    if (auto cert = consistency_certificate(cp, ra, rb); !cert.empty()) throw NoSolutionError(std::move(cert));

    const Matrix& p = fa.p;  // n x n
    const Matrix& r = fb.q;  // k x k
    Matrix constant = p.block(0, 0, n, ra) * cp.block(0, 0, ra, rb) * r.block(0, 0, rb, k);

    // The coefficient of the free entry (i, j) of the middle block is the
    // outer product of column i of P and row j of R.
    std::vector<Parameter> params;
    params.reserve(n * k - ra * rb);
    auto add_block = [&](std::size_t i0, std::size_t i1, std::size_t j0, std::size_t j1) {
        for (std::size_t i = i0; i < i1; ++i) {
            for (std::size_t j = j0; j < j1; ++j) {
                Matrix coeff(n, k);
                for (std::size_t s = 0; s < n; ++s) {
                    if (p(s, i).is_zero()) continue;
                    for (std::size_t t = 0; t < k; ++t) coeff(s, t) = p(s, i) * r(j, t);
                }
                params.push_back({"p" + std::to_string(params.size() + 1), std::move(coeff)});
            }
        }
    };
    add_block(0, ra, rb, k);  // T12
    add_block(ra, n, 0, rb);  // T21
    add_block(ra, n, rb, k);  // T22

    GeneralSolution sol;
    sol.param_count = params.size();
    sol.x = ParametricMatrix(std::move(constant), std::move(params));
    sol.route = Route::direct;
    sol.groups = {{"alpha", ra * (k - rb)}, {"beta", (n - ra) * rb}, {"gamma", (n - ra) * (k - rb)}};
    sol.fa = std::move(fa);
    sol.fb = std::move(fb);
    return sol;
}

Matrix penrose_solution(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& ga, const Matrix& gb,
                        const Matrix& y) {
    check_problem_shapes(a, b, c);
    if (y.rows() != a.cols() || y.cols() != b.rows()) {
        throw ShapeError("penrose_solution: Y must be " + std::to_string(a.cols()) + "x" + std::to_string(b.rows()));
    }
    if (!is_one_inverse(a, ga)) throw InvalidInverseError("penrose_solution: G_A is not a {1}-inverse of A");
    if (!is_one_inverse(b, gb)) throw InvalidInverseError("penrose_solution: G_B is not a {1}-inverse of B");
    return ga * c * gb + y - ga * a * y * b * gb;
}

bool solve_membership(const Matrix& x0, const ParametricMatrix& x) {
    if (x0.rows() != x.rows() || x0.cols() != x.cols()) {
        throw ShapeError("solve_membership: candidate " + dims(x0) + " vs solution " + std::to_string(x.rows()) + "x" +
                         std::to_string(x.cols()));
    }
    const Matrix rhs = vec(x0 - x.constant());
    if (x.param_count() == 0) return rhs.is_zero();
    Matrix span(rhs.rows(), x.param_count());
    for (std::size_t p = 0; p < x.param_count(); ++p) span.set_block(0, p, vec(x.params()[p].coeff));
    return rank(span) == rank(hstack(span, rhs));
}

bool solve_membership(const Matrix& x0, const GeneralSolution& sol) { return solve_membership(x0, sol.x); }

namespace {

bool contained_in(const ParametricMatrix& x, const ParametricMatrix& y) {
    if (!solve_membership(x.constant(), y)) return false;
    return std::all_of(x.params().begin(), x.params().end(),
                       [&](const Parameter& p) { return solve_membership(x.constant() + p.coeff, y); });
}

}  // namespace

bool same_solution_set(const ParametricMatrix& x, const ParametricMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    return x.param_count() == y.param_count() && contained_in(x, y) && contained_in(y, x);
}

}  // namespace axbsolve
