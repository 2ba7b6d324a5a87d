#include "sigenh/detect.hpp"

#include <cmath>
#include <stdexcept>

namespace sigenh::detect {

Signal dilated_conv(const DilatedConvLayer& layer, const Signal& x) {
    require_valid(x, "detect::dilated_conv");
    if (layer.taps.empty()) throw std::invalid_argument("dilated_conv: empty kernel");
    if (layer.dilation < 1) throw std::invalid_argument("dilated_conv: dilation must be >= 1");

    const std::size_t n = x.samples.size();
    const std::size_t k = layer.taps.size();
    const auto r = static_cast<std::size_t>(layer.dilation);

    Signal out = x;
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t t = 0; t < k; ++t) {
            const std::size_t offset = t * r;
            if (offset > i) break;
            acc += layer.taps[t] * x.samples[i - offset];
        }
        out.samples[i] = acc;
    }
    return out;
}

int receptive_field(int layer_index) {
    if (layer_index < 1 || layer_index > 3) {
        throw std::invalid_argument("receptive_field: layer_index must be in 1..3");
    }
    // Kernel 3 with dilations 1, 2, 4: each layer i adds 2 * 2^(i-1) samples
    // of span, so the cumulative field is 1 + 2 * (2^i - 1) = 2^(i+1) - 1.
    int span = 1;
    for (int layer = 1; layer <= layer_index; ++layer) {
        span += 2 * (1 << (layer - 1));
    }
    return span;
}

DetectorOutput softmax2(double logit_signal, double logit_noise) {
    if (std::isnan(logit_signal) || std::isnan(logit_noise)) {
        throw std::invalid_argument("softmax2: NaN logit");
    }
    DetectorOutput out;
    out.logit_signal = logit_signal;
    out.logit_noise = logit_noise;
    if (logit_signal == logit_noise) {
        out.p_signal = 0.5;
        out.p_noise = 0.5;
        return out;
    }
    const double peak = std::max(logit_signal, logit_noise);
    const double es = std::exp(logit_signal - peak);
    const double en = std::exp(logit_noise - peak);
    out.p_signal = es / (es + en);
    out.p_noise = en / (es + en);
    return out;
}

FeatureScorer energy_scorer(double noise_floor_power) {
    if (!(noise_floor_power > 0.0)) {
        throw std::invalid_argument("energy_scorer: noise floor power must be > 0");
    }
    return [noise_floor_power](const Signal& y) {
        return std::make_pair(std::log(power(y) / noise_floor_power), 0.0);
    };
}

DetectorOutput run(const Signal& y, const FeatureScorer& scorer) {
    require_valid(y, "detect::run");
    if (!scorer) throw std::invalid_argument("detect::run: empty scorer");
    const auto [logit_signal, logit_noise] = scorer(y);
    return softmax2(logit_signal, logit_noise);
}

}  // namespace sigenh::detect
