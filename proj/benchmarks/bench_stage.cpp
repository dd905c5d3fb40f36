#include <benchmark/benchmark.h>

#include "minlink/generate.hpp"
#include "minlink/oracle.hpp"
#include "minlink/recovery.hpp"
#include "minlink/stage_one.hpp"

using namespace minlink;

static void BM_StageOne(benchmark::State& state) {
    const Instance inst = generate_instance({static_cast<std::size_t>(state.range(0)),
                                             static_cast<std::size_t>(state.range(1)), 1000, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_stage_one(inst));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StageOne)->ArgsProduct({{100, 200, 400, 800}, {4, 6, 8}})->Unit(benchmark::kMillisecond);

static void BM_StageTwo(benchmark::State& state) {
    const Instance inst = generate_instance({static_cast<std::size_t>(state.range(0)), 6, 1000, 1});
    const Ledger ledger = run_stage_one(inst);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_stage_two(ledger, inst));
    }
}
BENCHMARK(BM_StageTwo)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& state) {
    const Instance inst = generate_instance({static_cast<std::size_t>(state.range(0)), 6, 50, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_reachable_sets(inst));
    }
}
BENCHMARK(BM_Oracle)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
