#include "sigenh/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "sigenh/rng.hpp"

namespace sigenh {

void validate(const NoiseSpec& spec) {
    if (!(spec.gaussian_sigma >= 0.0)) {
        throw std::invalid_argument("NoiseSpec: gaussian_sigma must be >= 0");
    }
    if (!(spec.impulse_prob >= 0.0 && spec.impulse_prob <= 1.0)) {
        throw std::invalid_argument("NoiseSpec: impulse_prob must be in [0, 1]");
    }
    if (!(spec.impulse_sigma >= 0.0)) {
        throw std::invalid_argument("NoiseSpec: impulse_sigma must be >= 0");
    }
}

Signal add_noise(const Signal& s, const NoiseSpec& spec) {
    require_valid(s, "add_noise");
    validate(spec);

    Signal out = s;
    const bool gauss_on = spec.gaussian_sigma > 0.0;
    const bool impulse_on = spec.impulse_prob > 0.0 && spec.impulse_sigma > 0.0;
    if (!gauss_on && !impulse_on) return out;  // all-zero spec is the identity

    auto rng = make_rng(spec.rng_seed);
    std::normal_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    for (double& v : out.samples) {
        if (gauss_on) v += spec.gaussian_sigma * unit(rng);
        if (impulse_on && uniform(rng) < spec.impulse_prob) {
            v += spec.impulse_sigma * unit(rng);
        }
    }
    return out;
}

NoiseSpec noise_for_snr(const Signal& clean, double snr_db, double impulse_prob,
                        double impulse_over_gaussian, std::uint64_t seed) {
    const double p_clean = power(clean);
    if (!(p_clean > 0.0)) {
        throw std::invalid_argument("noise_for_snr: clean signal has zero energy");
    }
    if (impulse_prob < 0.0 || impulse_prob > 1.0 || impulse_over_gaussian < 0.0) {
        throw std::invalid_argument("noise_for_snr: bad impulse parameters");
    }
    const double target_noise_power = p_clean * std::pow(10.0, -snr_db / 10.0);
    // total = sigma_g^2 * (1 + p * ratio^2)
    const double denom = 1.0 + impulse_prob * impulse_over_gaussian * impulse_over_gaussian;
    NoiseSpec spec;
    spec.gaussian_sigma = std::sqrt(target_noise_power / denom);
    spec.impulse_prob = impulse_prob;
    spec.impulse_sigma = impulse_over_gaussian * spec.gaussian_sigma;
    spec.rng_seed = seed;
    return spec;
}

}  // namespace sigenh
