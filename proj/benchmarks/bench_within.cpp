#include "sigmakit/within.hpp"

#include <benchmark/benchmark.h>

static void BM_CountWithin(benchmark::State& state) {
    sigmakit::ScanOptions opts;
    opts.threads = static_cast<unsigned>(state.range(1));
    const auto x = static_cast<std::uint64_t>(state.range(0));
    const auto k = sigmakit::ThresholdSpec::power(sigmakit::Fraction::make(1, 2));
    for (auto _ : state) benchmark::DoNotOptimize(sigmakit::count_within(x, sigmakit::Ell{}, k, opts));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * x));
}
BENCHMARK(BM_CountWithin)->Args({1'000'000, 1})->Args({1'000'000, 2})->UseRealTime()->Unit(benchmark::kMillisecond);
