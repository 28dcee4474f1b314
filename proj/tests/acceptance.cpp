// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit if any
// criterion fails. Everything is exact; the only tolerances are wall clock
// limits.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "axbsolve/axb_solver.hpp"
#include "axbsolve/factorization.hpp"
#include "axbsolve/kron.hpp"
#include "axbsolve/kron_route.hpp"
#include "axbsolve/random.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace axbsolve;
using fixtures::Instance;

namespace {

constexpr double kAc1MaxSeconds = 1.0;
constexpr double kAc4MaxSeconds = 30.0;
constexpr int kRandomInstances = 500;
constexpr std::size_t kMaxDim = 5;
constexpr int kSubstitutions = 10;
constexpr int kPerturbed = 200;
constexpr int kRouteInstances = 200;
constexpr int kIdentityInstances = 100;
constexpr int kOracleInstances = 100;
constexpr std::size_t kOracleMaxDim = 3;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Matrix random_inner_inverse(Rng& rng, const Matrix& a) {
    const auto f = rank_normal_form(a);
    return rohde_one_inverse(f, RohdeBlocks::random(rng, a.rows(), a.cols(), f.rank));
}

// Column i is vec of the i-th parameter coefficient.
Matrix generator_columns(const ParametricMatrix& x) {
    Matrix g(x.rows() * x.cols(), x.param_count());
    for (std::size_t p = 0; p < x.param_count(); ++p) g.set_block(0, p, vec(x.params()[p].coeff));
    return g;
}

Matrix column_matrix(const std::vector<Matrix>& cols, std::size_t rows) {
    Matrix g(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) g.set_block(0, j, cols[j]);
    return g;
}

ParameterValues random_values(Rng& rng, const ParametricMatrix& x) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    ParameterValues v;
    for (const auto& p : x.params()) v[p.name] = Rational(mpz_class(num(rng)), mpz_class(den(rng)));
    return v;
}

std::vector<Instance> ac4_instances() {
    Rng rng(20240501);
    std::vector<Instance> out;
    for (int i = 0; i < kRandomInstances; ++i) out.push_back(fixtures::random_consistent(rng, kMaxDim));
    return out;
}

Outcome ac1() {
    const auto t0 = Clock::now();
    const KronFactorization kf =
        make_kron_factorization(fixtures::ex1_a, fixtures::ex1_b, fixtures::ex1_fa, fixtures::ex1_fb);
    const GeneralSolution sol = kron_general_solution(kf, fixtures::ex1_c);
    const Matrix c2 = transformed_rhs_vector(kf, fixtures::ex1_c);
    const double secs = seconds_since(t0);

    const Matrix want_const = Matrix::column({-1, -1, -2, -2, 0, 0});
    const Matrix want_a1 = Matrix::column({-1, 0, -1, 0, 1, 0});
    const Matrix want_a2 = Matrix::column({2, -1, 2, -1, -2, 1});
    bool ok = sol.param_count == 2 && vec(sol.x.constant()) == want_const &&
              vec(sol.x.params()[0].coeff) == want_a1 && vec(sol.x.params()[1].coeff) == want_a2;
    ok = ok && greek_parameter_names(sol) == std::vector<std::string>{"alpha_1", "alpha_2"};
    const bool c2_ok = c2 == Matrix::column({-3, -1, -6, -2, 0, 0, 0, 0, 0});
    std::ostringstream d;
    d << "vec X " << (ok ? "exact" : "MISMATCH") << ", c'' " << (c2_ok ? "exact" : "MISMATCH") << ", " << secs
      << " s (limit " << kAc1MaxSeconds << " s)";
    return {ok && c2_ok && secs < kAc1MaxSeconds, d.str()};
}

Outcome ac2() {
    const GeneralSolution sol =
        general_solution(fixtures::ex1_a, fixtures::ex1_b, fixtures::ex1_c, fixtures::ex1_fa, fixtures::ex1_fb);
    const Matrix cp = transform_rhs(fixtures::ex1_c, fixtures::ex1_fa, fixtures::ex1_fb);
    const bool x_ok = sol.param_count == 2 && sol.x == fixtures::ex2_solution();
    const bool cp_ok = cp == Matrix{{-3, -6, 0}, {-1, -2, 0}, {0, 0, 0}};
    return {x_ok && cp_ok, std::string("X ") + (x_ok ? "exact" : "MISMATCH") + ", C' " + (cp_ok ? "exact" : "MISMATCH")};
}

Outcome ac3() {
    const GeneralSolution sol =
        general_solution(fixtures::ex3_a, fixtures::ex3_b, fixtures::ex3_c, fixtures::ex3_fa, fixtures::ex3_fb);
    const Matrix cp = transform_rhs(fixtures::ex3_c, fixtures::ex3_fa, fixtures::ex3_fb);
    const bool x_ok = sol.param_count == 5 && sol.x == fixtures::ex3_solution();
    const bool names_ok =
        greek_parameter_names(sol) == std::vector<std::string>{"alpha", "beta_1", "beta_2", "gamma_1", "gamma_2"};
    const bool cp_ok = cp == Matrix{{2, 0}, {0, 0}, {0, 0}};
    return {x_ok && names_ok && cp_ok, std::string("X ") + (x_ok && names_ok ? "exact" : "MISMATCH") + ", C' " +
                                           (cp_ok ? "exact" : "MISMATCH")};
}

Outcome ac4(const std::vector<Instance>& insts, std::vector<GeneralSolution>& sols) {
    const auto t0 = Clock::now();
    int bad = 0;
    sols.clear();
    for (const auto& inst : insts) {
        sols.push_back(general_solution(inst.a, inst.b, inst.c));
        const auto& s = sols.back();
        const std::size_t n = inst.a.cols(), k = inst.b.rows();
        const std::size_t expected = n * k - oracle::rref_rank(inst.a) * oracle::rref_rank(inst.b);
        if (s.param_count != expected || s.x.param_count() != expected ||
            oracle::rref_rank(generator_columns(s.x)) != expected)
            ++bad;
    }
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << bad << " mismatches over " << insts.size() << " instances, " << secs << " s (limit " << kAc4MaxSeconds
      << " s)";
    return {bad == 0 && secs < kAc4MaxSeconds, d.str()};
}

Outcome ac5(const std::vector<Instance>& insts, const std::vector<GeneralSolution>& sols) {
    Rng rng(5);
    int bad = 0, checks = 0;
    for (std::size_t i = 0; i < insts.size(); ++i) {
        for (int s = 0; s < kSubstitutions; ++s, ++checks) {
            const Matrix x = substitute(sols[i].x, random_values(rng, sols[i].x));
            if (!(insts[i].a * x * insts[i].b - insts[i].c).is_zero()) ++bad;
        }
    }
    return {bad == 0, std::to_string(bad) + " nonzero residuals over " + std::to_string(checks) + " substitutions"};
}

Outcome ac6(const std::vector<Instance>& insts) {
    Rng rng(6);
    std::vector<Instance> all = insts;
    std::vector<bool> expected(insts.size(), true);
    int made = 0;
    while (made < kPerturbed) {
        Instance inst = fixtures::random_consistent(rng, kMaxDim);
        std::uniform_int_distribution<std::size_t> ri(0, inst.c.rows() - 1), ci(0, inst.c.cols() - 1);
        std::uniform_int_distribution<long> delta(1, 3);
        inst.c(ri(rng), ci(rng)) += Rational(rng() % 2 ? delta(rng) : -delta(rng));
        if (oracle::solve_linear(oracle::kron_system(inst.a, inst.b), oracle::column_stack(inst.c))) continue;
        all.push_back(inst);
        expected.push_back(false);
        ++made;
    }
    int disagree = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& p = all[i];
        const bool blocks_zero = is_consistent(p.a, p.b, p.c);
        const bool penrose =
            penrose_condition(p.a, p.b, p.c, random_inner_inverse(rng, p.a), random_inner_inverse(rng, p.b));
        const bool tail_zero = vec_consistency(make_kron_factorization(p.a, p.b), p.c);
        if (blocks_zero != penrose || blocks_zero != tail_zero || blocks_zero != expected[i]) ++disagree;
    }
    return {disagree == 0, std::to_string(disagree) + " disagreements over " + std::to_string(all.size()) +
                               " instances (" + std::to_string(kPerturbed) + " perturbed)"};
}

Outcome ac7() {
    Rng rng(7);
    int bad = 0;
    for (int t = 0; t < kRouteInstances; ++t) {
        const Instance inst = fixtures::random_consistent(rng, kMaxDim);
        const auto direct = general_solution(inst.a, inst.b, inst.c);
        const auto viakron = kron_general_solution(make_kron_factorization(inst.a, inst.b), inst.c);
        if (direct.param_count != viakron.param_count || !same_solution_set(direct.x, viakron.x)) ++bad;
    }
    return {bad == 0, std::to_string(bad) + " mismatches over " + std::to_string(kRouteInstances) + " instances"};
}

Outcome ac8() {
    Rng rng(8);
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    int bad_t = 0, bad_mixed = 0, bad_rank = 0, bad_inv = 0, bad_rohde = 0;
    for (int t = 0; t < kIdentityInstances; ++t) {
        const std::size_t p = dim(rng), q = dim(rng), r = dim(rng), s = dim(rng), u = dim(rng), v = dim(rng);
        const Matrix a = random_small_matrix(rng, p, q), b = random_small_matrix(rng, r, s);
        const Matrix c = random_small_matrix(rng, q, u), d = random_small_matrix(rng, s, v);
        if (kron(a, b).transpose() != kron(a.transpose(), b.transpose())) ++bad_t;
        if (kron(a, b) * kron(c, d) != kron(a * c, b * d)) ++bad_mixed;
        if (oracle::rref_rank(kron(a, b)) != oracle::rref_rank(a) * oracle::rref_rank(b)) ++bad_rank;

        const Matrix ra = random_regular(rng, p), rb = random_regular(rng, r);
        if (inverse(kron(ra, rb)) != kron(inverse(ra), inverse(rb))) ++bad_inv;

        const Matrix ab = kron(a, b);
        if (ab * kron(random_inner_inverse(rng, a), random_inner_inverse(rng, b)) * ab != ab) ++bad_rohde;
    }
    std::ostringstream d;
    d << "failures: transpose " << bad_t << ", mixed product " << bad_mixed << ", rank " << bad_rank
      << ", inverse " << bad_inv << ", {1}-inverse " << bad_rohde << " (" << kIdentityInstances << " each)";
    return {bad_t + bad_mixed + bad_rank + bad_inv + bad_rohde == 0, d.str()};
}

Outcome ac9() {
    Rng rng(9);
    int cases = 0, bad = 0, bad_square = 0;
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t n = 1; n <= 4; ++n)
            for (std::size_t k = 1; k <= 4; ++k)
                for (std::size_t l = 1; l <= 4; ++l)
                    for (std::size_t ra = 0; ra <= std::min(m, n); ++ra)
                        for (std::size_t rb = 0; rb <= std::min(k, l); ++rb) {
                            ++cases;
                            const Matrix a = random_of_rank(rng, m, n, ra);
                            const Matrix b = random_of_rank(rng, k, l, rb);
                            const KronFactorization kf = make_kron_factorization(a, b);
                            const Matrix e = kron(Matrix::rank_normal(k, l, rb).transpose(),
                                                  Matrix::rank_normal(m, n, ra));
                            if (kf.fa.rank != ra || kf.fb.rank != rb ||
                                kf.g.apply_cols(kf.d.apply_rows(e)) != Matrix::rank_normal(m * l, n * k, ra * rb))
                                ++bad;
                            if (m == n && k == l && kf.d != kf.g.transpose()) ++bad_square;
                        }
    return {bad + bad_square == 0, std::to_string(bad) + " normalization and " + std::to_string(bad_square) +
                                       " square-case failures over " + std::to_string(cases) + " (dims, ranks) cases"};
}

// Independent elimination on (B^T (x) A) vec X = vec C against general_solution.
Outcome ac10() {
    Rng rng(10);
    int bad = 0;
    for (int t = 0; t < kOracleInstances; ++t) {
        const Instance inst = fixtures::random_consistent(rng, kOracleMaxDim);
        const Matrix sys = oracle::kron_system(inst.a, inst.b);
        const Matrix rhs = oracle::column_stack(inst.c);
        const auto ref = oracle::solve_linear(sys, rhs);
        const auto sol = general_solution(inst.a, inst.b, inst.c);
        if (!ref || ref->nullspace.size() != sol.param_count) {
            ++bad;
            continue;
        }
        const std::size_t nk = sys.cols();
        const Matrix gens = generator_columns(sol.x);
        const Matrix x0 = oracle::column_stack(sol.x.constant());
        // ours inside the reference: particular solves, generators are homogeneous
        bool ok = sys * x0 == rhs && (sys * gens).is_zero() && oracle::rref_rank(gens) == sol.param_count;
        // reference inside ours: the difference of particulars and every
        // nullspace vector lie in the span of our generators
        for (const Matrix& w : ref->nullspace) ok = ok && oracle::solve_linear(gens, w).has_value();
        ok = ok && oracle::solve_linear(gens, ref->particular - x0).has_value();
        ok = ok && oracle::rref_rank(column_matrix(ref->nullspace, nk)) == sol.param_count;
        if (!ok) ++bad;
    }
    return {bad == 0, std::to_string(bad) + " mismatches over " + std::to_string(kOracleInstances) + " instances"};
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](const char* id, const char* title, const std::function<Outcome()>& fn) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ' ' << title << ": " << o.detail << std::endl;
        if (!o.pass) ++failed;
    };

    const std::vector<Instance> insts = ac4_instances();
    std::vector<GeneralSolution> sols;

    report("AC1", "first worked example, Kronecker route", ac1);
    report("AC2", "second worked example, direct route", ac2);
    report("AC3", "third worked example, direct route", ac3);
    report("AC4", "parameter count nk - ab", [&] { return ac4(insts, sols); });
    report("AC5", "residual of substituted solutions", [&] {
        if (sols.size() != insts.size()) return Outcome{false, "no solutions from AC4"};
        return ac5(insts, sols);
    });
    report("AC6", "consistency criteria agree", [&] { return ac6(insts); });
    report("AC7", "direct and Kronecker routes agree", ac7);
    report("AC8", "Kronecker product identities", ac8);
    report("AC9", "permutation normalization", ac9);
    report("AC10", "completeness against independent elimination", ac10);

    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
