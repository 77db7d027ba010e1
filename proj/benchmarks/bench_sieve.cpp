#include "sigmakit/sieve.hpp"

#include <benchmark/benchmark.h>

static void BM_SieveRange(benchmark::State& state) {
    const auto lo = static_cast<std::uint64_t>(state.range(0));
    const std::uint64_t len = 1 << 20;
    sigmakit::SieveConfig config;
    config.global_bound = std::uint64_t{1} << 40;
    for (auto _ : state) benchmark::DoNotOptimize(sigmakit::sieve_range(lo, lo + len - 1, config));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * len));
}
BENCHMARK(BM_SieveRange)->Arg(1)->Arg(10'000'000)->Arg(1'000'000'000)->Unit(benchmark::kMillisecond);

static void BM_LinearSieve(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sigmakit::linear_sieve(n));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_LinearSieve)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
