#include "axbsolve/bench.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "axbsolve/kron_route.hpp"
#include "axbsolve/random.hpp"

namespace axbsolve {

namespace {

template <typename Fn>
BenchRow timed(Fn&& solve) {
    BenchRow row;
    PeakEntriesScope scope;
    const auto start = std::chrono::steady_clock::now();
    solve();
    const auto stop = std::chrono::steady_clock::now();
    row.wall_time_ns = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    row.peak_entries = scope.peak();
    return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    if (config.max_dim == 0) throw std::invalid_argument("max-dim must be at least 1");
    if (config.count == 0) throw std::invalid_argument("count must be at least 1");

    Rng rng(config.seed);
    std::vector<BenchRow> rows;
    rows.reserve(2 * config.count);
    for (std::size_t id = 0; id < config.count; ++id) {
        const std::size_t d = 1 + id % config.max_dim;
        const Matrix a = random_small_matrix(rng, d, d);
        const Matrix b = random_small_matrix(rng, d, d);
        const Matrix c = a * random_matrix(rng, d, d) * b;

        const GeneralSolution direct = general_solution(a, b, c);
        const GeneralSolution viakron = kron_general_solution(make_kron_factorization(a, b), c);
        if (!same_solution_set(direct.x, viakron.x)) {
            throw std::logic_error("bench instance " + std::to_string(id) + ": routes disagree");
        }

        BenchRow dr = timed([&] { (void)general_solution(a, b, c); });
        BenchRow kr = timed([&] { (void)kron_general_solution(make_kron_factorization(a, b), c); });
        for (BenchRow* row : {&dr, &kr}) {
            row->instance_id = id;
            row->m = row->n = row->k = row->l = d;
            row->a = direct.fa.rank;
            row->b = direct.fb.rank;
        }
        dr.route = Route::direct;
        kr.route = Route::kronecker;
        rows.push_back(dr);
        rows.push_back(kr);
    }
    return rows;
}

void write_bench_csv(std::span<const BenchRow> rows, std::ostream& out) {
    out << "instance_id,m,n,k,l,a,b,route,wall_time_ns,peak_entries\n";
    for (const auto& r : rows) {
        out << r.instance_id << ',' << r.m << ',' << r.n << ',' << r.k << ',' << r.l << ',' << r.a << ',' << r.b << ','
            << to_string(r.route) << ',' << r.wall_time_ns << ',' << r.peak_entries << '\n';
    }
}

}  // namespace axbsolve
