#include "sigenh/inp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sigenh::inp {

namespace {

// Median via order statistics; even lengths average the two central values.
double median_abs(const std::vector<double>& samples) {
    std::vector<double> mags(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) mags[i] = std::abs(samples[i]);
    const std::size_t n = mags.size();
    const std::size_t hi = n / 2;
    std::nth_element(mags.begin(), mags.begin() + hi, mags.end());
    const double upper = mags[hi];
    if (n % 2 == 1) return upper;
    const double lower = *std::max_element(mags.begin(), mags.begin() + hi);
    return 0.5 * (lower + upper);
}

}  // namespace

void validate(const InpConfig& cfg) {
    if (!(cfg.tau0 >= 0.0)) throw std::invalid_argument("InpConfig: tau0 must be >= 0");
}

double threshold(const Signal& y, const InpConfig& cfg) {
    require_valid(y, "inp::threshold");
    validate(cfg);
    return (1.0 + 2.0 * cfg.tau0) * median_abs(y.samples);
}

Signal clip(const Signal& y, double tau_r) {
    require_valid(y, "inp::clip");
    if (!(tau_r > 0.0)) throw std::invalid_argument("inp::clip: tau_r must be > 0");
    Signal out = y;
    for (double& v : out.samples) {
        const double a = std::abs(v);
        if (a > tau_r) {
            const double ratio = tau_r / a;
            v *= ratio * ratio;
        }
    }
    return out;
}

Signal normalize(const Signal& y) {
    require_valid(y, "inp::normalize");
    double peak = 0.0;
    for (double v : y.samples) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) {
        throw std::invalid_argument("inp::normalize: all-zero signal");
    }
    Signal out = y;
    for (double& v : out.samples) v /= peak;
    return out;
}

Signal preprocess(const Signal& y, const InpConfig& cfg) {
    return normalize(clip(y, threshold(y, cfg)));
}

}  // namespace sigenh::inp
