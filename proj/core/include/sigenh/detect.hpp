#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "sigenh/signal.hpp"

namespace sigenh::detect {

/// 1D convolution kernel with taps spaced `dilation` samples apart.
struct DilatedConvLayer {
    std::vector<double> taps;
    int dilation = 1;
};

/// out(n) = sum_t taps[t] * x(n - t*dilation), zero-padded; equals standard
/// convolution at dilation 1. Output length equals input length.
Signal dilated_conv(const DilatedConvLayer& layer, const Signal& x);

/// Cumulative receptive field after layer 1..3 of the kernel-3 stack with
/// dilations 1, 2, 4: spans of 3, 7 and 15 samples.
int receptive_field(int layer_index);

/// Two-class softmax result over (signal, noise) logits.
struct DetectorOutput {
    double p_signal = 0.5;
    double p_noise = 0.5;
    double logit_signal = 0.0;
    double logit_noise = 0.0;
};

/// Overflow-safe two-class softmax (max-subtraction). Infinite logits of one
/// sign are tolerated; NaN is rejected.
DetectorOutput softmax2(double logit_signal, double logit_noise);

/// Maps a waveform to (logit_signal, logit_noise). Stands in for a trained
/// feature extractor; anything with the right shape plugs in.
using FeatureScorer = std::function<std::pair<double, double>(const Signal&)>;

/// Energy detector: logit_signal = ln(mean power / noise_floor_power),
/// logit_noise = 0.
FeatureScorer energy_scorer(double noise_floor_power);

DetectorOutput run(const Signal& y, const FeatureScorer& scorer);

}  // namespace sigenh::detect
