#include <benchmark/benchmark.h>

#include "invlab/constants.hpp"
#include "invlab/dirichlet.hpp"
#include "invlab/selberg_delange.hpp"

using namespace invlab;
using arith::u64;

static void BM_Hq(benchmark::State& state) {
    const u64 P = static_cast<u64>(state.range(1));
    constants::primes_through(P);
    for (auto _ : state) benchmark::DoNotOptimize(constants::H_q(static_cast<u64>(state.range(0)), P));
}
BENCHMARK(BM_Hq)->Args({4, 1'000'000})->Args({4, 10'000'000})->Args({60, 1'000'000})->Unit(benchmark::kMillisecond);

static void BM_GB1(benchmark::State& state) {
    const constants::ResidueClassSet B(static_cast<u64>(state.range(0)), {1});
    constants::primes_through(1'000'000);
    for (auto _ : state) benchmark::DoNotOptimize(constants::G_B1(B, 1'000'000));
}
BENCHMARK(BM_GB1)->Arg(12)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_CharacterTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet::character_table(static_cast<u64>(state.range(0))));
}
BENCHMARK(BM_CharacterTable)->Arg(120)->Arg(1000);

static void BM_LambdaCoeffs(benchmark::State& state) {
    const std::vector<sd::cplx> g(11, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(sd::lambda_coeffs(0.5, g, 10));
}
BENCHMARK(BM_LambdaCoeffs);

BENCHMARK_MAIN();
