#include "sigmakit/near_perfect.hpp"

#include <benchmark/benchmark.h>

// highly composite inputs are the slow case for the subset search
static void BM_Profile(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sigmakit::profile(n));
}
BENCHMARK(BM_Profile)->Arg(234)->Arg(5040)->Arg(720720)->Arg(3603600);

static void BM_CensusNear(benchmark::State& state) {
    sigmakit::ScanOptions opts;
    opts.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(sigmakit::census_near(100'000, 2, {}, opts));
}
BENCHMARK(BM_CensusNear)->Unit(benchmark::kMillisecond);
