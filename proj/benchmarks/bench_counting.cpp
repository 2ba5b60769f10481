#include <benchmark/benchmark.h>

#include "invlab/arith.hpp"
#include "invlab/counting.hpp"
#include "invlab/groups.hpp"

using namespace invlab;
using namespace invlab::counting;

static void BM_CountTEJ(benchmark::State& state) {
    CountRequest req;
    req.x_max = static_cast<u64>(state.range(0));
    req.options.threads = 1;
    req.statistics = {StatisticSpec::T(), StatisticSpec::E(4), StatisticSpec::E(6), StatisticSpec::J(4),
                      StatisticSpec::J(6)};
    for (auto _ : state) benchmark::DoNotOptimize(count(req));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountTEJ)->RangeMultiplier(10)->Range(100'000, 10'000'000)->Unit(benchmark::kMillisecond);

static void BM_CountDBoth(benchmark::State& state) {
    CountRequest req;
    req.x_max = static_cast<u64>(state.range(0));
    req.options.threads = 1;
    req.statistics = {StatisticSpec::D(4, DMode::Both)};
    for (auto _ : state) benchmark::DoNotOptimize(count(req));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountDBoth)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_Segment(benchmark::State& state) {
    const u64 lo = 100'000'000, hi = lo + static_cast<u64>(state.range(0));
    const auto base = arith::primes_up_to(20'000);
    for (auto _ : state) benchmark::DoNotOptimize(arith::lpf_segment(lo, hi, base));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Segment)->Arg(1 << 16)->Arg(1 << 20);

static void BM_UnitGroupStructure(benchmark::State& state) {
    u64 n = 1'000'000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(groups::unit_group_structure(n));
        n = n == 2'000'000 ? 1'000'000 : n + 1;
    }
}
BENCHMARK(BM_UnitGroupStructure);

static void BM_Lambda1Histogram(benchmark::State& state) {
    SieveOptions opt;
    opt.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(lambda1_histogram(static_cast<u64>(state.range(0)), opt));
}
BENCHMARK(BM_Lambda1Histogram)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
