#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace minlink {

struct BenchSweep {
    std::vector<std::size_t> ns;
    std::vector<std::size_t> c_sizes;
    std::vector<std::uint64_t> seeds;
    std::int64_t bound = 1000;
};

struct BenchRow {
    std::size_t n = 0;
    std::size_t c_size = 0;
    std::uint64_t seed = 0;
    int links = 0;
    std::size_t max_family = 0;  ///< largest per-orientation list over all layers
    double wall_ms = 0;          ///< Stage I plus Stage II, generation excluded
};

/// Solves every (n, c_size, seed) instance in order, one at a time.
std::vector<BenchRow> run_bench(const BenchSweep& sweep);

std::string bench_csv(const std::vector<BenchRow>& rows);

/// Least-squares slope of log(median wall time) against log(n), grouped by n.
double loglog_slope(const std::vector<BenchRow>& rows);

}  // namespace minlink
