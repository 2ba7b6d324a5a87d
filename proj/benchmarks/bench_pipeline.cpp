#include <benchmark/benchmark.h>

#include <cmath>

#include "sigenh/inp.hpp"
#include "sigenh/modulation.hpp"
#include "sigenh/noise.hpp"
#include "sigenh/pipeline.hpp"
#include "sigenh/stft.hpp"

using namespace sigenh;

namespace {

Signal impulsive_tone(std::size_t len, double snr_db) {
    ModulationSpec mod;
    mod.carrier_hz = 1000.0;
    const Signal clean = generate(mod, kDefaultSampleRate,
                                  static_cast<double>(len) / kDefaultSampleRate);
    return add_noise(clean, noise_for_snr(clean, snr_db, 0.01, 8.0, 3));
}

}  // namespace

// The full default chain on the batch unit used by the timing experiment.
static void BM_EnhanceChain(benchmark::State& state) {
    const Signal y = impulsive_tone(static_cast<std::size_t>(state.range(0)), -5.0);
    const pipeline::PipelineConfig cfg{};
    for (auto _ : state) {
        benchmark::DoNotOptimize(pipeline::enhance(y, cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EnhanceChain)->Arg(1024)->Arg(8192)->Arg(60000);

// Amplitude-domain impulse suppression alternatives. Truncation saturates at
// the threshold, zeroing blanks the sample, the shipped preprocessor applies
// the inverse-square law.
static void BM_InpSuppression(benchmark::State& state) {
    const Signal y = impulsive_tone(8192, 0.0);
    const double tau = inp::threshold(y);
    const int mode = static_cast<int>(state.range(0));
    for (auto _ : state) {
        if (mode == 0) {
            benchmark::DoNotOptimize(inp::clip(y, tau));
        } else {
            Signal out = y;
            for (double& v : out.samples) {
                if (std::abs(v) > tau) {
                    v = mode == 1 ? (v < 0.0 ? -tau : tau)  // truncation
                                  : 0.0;                    // zeroing
                }
            }
            benchmark::DoNotOptimize(out);
        }
    }
    state.SetItemsProcessed(state.iterations() * 8192);
}
BENCHMARK(BM_InpSuppression)->Arg(0)->Arg(1)->Arg(2);

static void BM_Stft(benchmark::State& state) {
    const Signal y = impulsive_tone(60000, 0.0);
    const stft::StftParams p{};
    for (auto _ : state) {
        benchmark::DoNotOptimize(stft::analyze(y, p));
    }
    state.SetItemsProcessed(state.iterations() * 60000);
}
BENCHMARK(BM_Stft);

BENCHMARK_MAIN();
