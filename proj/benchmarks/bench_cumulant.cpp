#include <benchmark/benchmark.h>

#include "sigenh/cumulant.hpp"
#include "sigenh/noise.hpp"
#include "sigenh/modulation.hpp"

using namespace sigenh;

namespace {

Signal noisy_tone(std::size_t len) {
    ModulationSpec mod;
    mod.carrier_hz = 1000.0;
    const Signal clean = generate(mod, kDefaultSampleRate,
                                  static_cast<double>(len) / kDefaultSampleRate);
    NoiseSpec spec;
    spec.gaussian_sigma = 1.0;
    spec.rng_seed = 2;
    return add_noise(clean, spec);
}

}  // namespace

static void BM_EstimateSlice(benchmark::State& state) {
    const Signal x = noisy_tone(static_cast<std::size_t>(state.range(0)));
    const int lag = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cumulant::estimate_slice(x, lag));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateSlice)->Args({8192, 16})->Args({8192, 64})->Args({65536, 64});

static void BM_ApplyFilter(benchmark::State& state) {
    const Signal x = noisy_tone(static_cast<std::size_t>(state.range(0)));
    const auto filter =
        cumulant::build_filter(cumulant::estimate_slice(x, static_cast<int>(state.range(1))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cumulant::apply(filter, x));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ApplyFilter)->Args({8192, 16})->Args({8192, 64})->Args({65536, 64});

static void BM_Enhance(benchmark::State& state) {
    const Signal x = noisy_tone(8192);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cumulant::enhance(x, 64));
    }
}
BENCHMARK(BM_Enhance);

BENCHMARK_MAIN();
