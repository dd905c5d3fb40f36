#include "minlink/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "minlink/generate.hpp"
#include "minlink/recovery.hpp"
#include "minlink/stage_one.hpp"

namespace minlink {

std::vector<BenchRow> run_bench(const BenchSweep& sweep) {
    std::vector<BenchRow> rows;
    for (const std::size_t c : sweep.c_sizes) {
        for (const std::size_t n : sweep.ns) {
            for (const std::uint64_t seed : sweep.seeds) {
                const Instance inst = generate_instance({n, c, sweep.bound, seed});
                const auto t0 = std::chrono::steady_clock::now();
                const Ledger ledger = run_stage_one(inst);
                const Tour tour = run_stage_two(ledger, inst);
                const auto t1 = std::chrono::steady_clock::now();
                rows.push_back({n, c, seed, tour.link_count, ledger.max_family_size(),
                                std::chrono::duration<double, std::milli>(t1 - t0).count()});
            }
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "n,c_size,seed,links,max_family,wall_ms\n";
    for (const BenchRow& r : rows) {
        os << r.n << ',' << r.c_size << ',' << r.seed << ',' << r.links << ',' << r.max_family << ',' << r.wall_ms
           << '\n';
    }
    return os.str();
}

double loglog_slope(const std::vector<BenchRow>& rows) {
    std::map<std::size_t, std::vector<double>> by_n;
    for (const BenchRow& r : rows) {
        by_n[r.n].push_back(r.wall_ms);
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (auto& [n, times] : by_n) {
        std::sort(times.begin(), times.end());
        const std::size_t k = times.size();
        const double med = k % 2 ? times[k / 2] : 0.5 * (times[k / 2 - 1] + times[k / 2]);
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(std::max(med, 1e-6)));
    }
    if (xs.size() < 2) {
        return 0;
    }
    double mx = 0, my = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        mx += xs[k];
        my += ys[k];
    }
    mx /= xs.size();
    my /= ys.size();
    double sxy = 0, sxx = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sxy += (xs[k] - mx) * (ys[k] - my);
        sxx += (xs[k] - mx) * (xs[k] - mx);
    }
    return sxy / sxx;
}

}  // namespace minlink
