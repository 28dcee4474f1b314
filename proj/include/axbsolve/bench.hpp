#ifndef AXBSOLVE_BENCH_HPP
#define AXBSOLVE_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "axbsolve/axb_solver.hpp"

namespace axbsolve {

struct BenchConfig {
    std::size_t max_dim = 4;
    std::size_t count = 4;
    std::uint64_t seed = 1;
};

struct BenchRow {
    std::size_t instance_id = 0;
    std::size_t m = 0, n = 0, k = 0, l = 0;
    std::size_t a = 0, b = 0;
    Route route = Route::direct;
    std::uint64_t wall_time_ns = 0;
    std::size_t peak_entries = 0;  // largest single matrix built by the route
};

/// Instance i is square with m = n = k = l = 1 + (i mod max_dim), random
/// small-integer A, B, X0 and C = A*X0*B. Each instance is solved by both
/// routes, the two solution sets are compared, then each route is timed.
/// Throws std::invalid_argument on zero max_dim or count, and
/// std::logic_error if the routes ever disagree.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// instance_id,m,n,k,l,a,b,route,wall_time_ns,peak_entries
void write_bench_csv(std::span<const BenchRow> rows, std::ostream& out);

}  // namespace axbsolve

#endif  // AXBSOLVE_BENCH_HPP
