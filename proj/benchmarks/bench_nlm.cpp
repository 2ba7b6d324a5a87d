#include <benchmark/benchmark.h>

#include "sigenh/nlm.hpp"
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
    spec.gaussian_sigma = 0.5;
    spec.rng_seed = 1;
    return add_noise(clean, spec);
}

}  // namespace

static void BM_NlmDenoise(benchmark::State& state) {
    const Signal y = noisy_tone(static_cast<std::size_t>(state.range(0)));
    nlm::NlmConfig cfg = nlm::config_for_patch(static_cast<int>(state.range(1)));
    cfg.h = 0.4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nlm::denoise(y, cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NlmDenoise)
    ->Args({1024, 1})
    ->Args({1024, 2})
    ->Args({1024, 4})
    ->Args({8192, 2})
    ->Args({65536, 2});

static void BM_NlmWeights(benchmark::State& state) {
    const Signal y = noisy_tone(4096);
    nlm::NlmConfig cfg = nlm::config_for_patch(2);
    cfg.h = 0.4;
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nlm::weights(y, 64 + (i++ % 3968), cfg));
    }
}
BENCHMARK(BM_NlmWeights);

BENCHMARK_MAIN();
