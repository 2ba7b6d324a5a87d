#pragma once

#include <cstdint>

#include "sigenh/signal.hpp"

namespace sigenh {

/// Bernoulli-Gaussian channel: white Gaussian background plus sparse Gaussian
/// impulses. Expected noise power is gaussian_sigma^2 +
/// impulse_prob * impulse_sigma^2.
struct NoiseSpec {
    double gaussian_sigma = 0.0;
    double impulse_prob = 0.0;   // in [0, 1], per sample
    double impulse_sigma = 0.0;
    std::uint64_t rng_seed = 0;
};

void validate(const NoiseSpec& spec);

/// out[n] = s[n] + g[n] + b[n] * i[n] with g ~ N(0, gaussian_sigma^2),
/// b ~ Bernoulli(impulse_prob), i ~ N(0, impulse_sigma^2). Reproducible under
/// identical rng_seed; the all-zero spec returns the input bit-for-bit.
Signal add_noise(const Signal& s, const NoiseSpec& spec);

/// Spec whose expected noise power puts `clean` at `snr_db`. The impulse part
/// keeps impulse_sigma = impulse_over_gaussian * gaussian_sigma, so setting
/// impulse_prob = 0 yields a plain AWGN channel.
NoiseSpec noise_for_snr(const Signal& clean, double snr_db, double impulse_prob,
                        double impulse_over_gaussian, std::uint64_t seed);

}  // namespace sigenh
