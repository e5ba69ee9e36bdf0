#include <benchmark/benchmark.h>

#include "copart/copartition.hpp"
#include "copart/parity_lab.hpp"
#include "copart/series.hpp"

using namespace copart;

// GF(2) expansion at the largest table checkpoint.
static void BM_ParityExpansion(benchmark::State& state)
{
    const CpParams p(1, 13, 14);
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cp_parity(p, N));
    }
}
BENCHMARK(BM_ParityExpansion)->Arg(4000)->Arg(32000)->Unit(benchmark::kMillisecond);

static void BM_ExactExpansion(benchmark::State& state)
{
    const CpParams p(1, 1, 2);
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cp_series(p, N));
    }
}
BENCHMARK(BM_ExactExpansion)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_ParityMul(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    const auto x = cp_parity(CpParams(1, 2, 3), N);
    const auto y = cp_parity(CpParams(3, 1, 4), N);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(x, y, N));
    }
}
BENCHMARK(BM_ParityMul)->Arg(4000)->Arg(32000)->Unit(benchmark::kMillisecond);

static void BM_Enumerate(benchmark::State& state)
{
    const CpParams p(1, 1, 2);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate(p, n));
    }
}
BENCHMARK(BM_Enumerate)->Arg(20)->Arg(30);

static void BM_TableThreeColumn(benchmark::State& state)
{
    const int checkpoints[] = {1000, 2000, 4000, 8000, 16000, 32000};
    for (auto _ : state) {
        benchmark::DoNotOptimize(density_report(CpParams(1, 31, 32), checkpoints));
    }
}
BENCHMARK(BM_TableThreeColumn)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
