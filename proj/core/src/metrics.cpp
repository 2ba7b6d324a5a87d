#include "sigenh/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sigenh {

namespace {

double sum_sq(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return acc;
}

}  // namespace

double snr_db(const Signal& clean, const Signal& noisy) {
    require_valid(clean, "snr_db");
    require_valid(noisy, "snr_db");
    if (clean.samples.size() != noisy.samples.size()) {
        throw std::invalid_argument("snr_db: length mismatch");
    }
    const double signal_energy = sum_sq(clean.samples);
    if (!(signal_energy > 0.0)) {
        throw std::invalid_argument("snr_db: clean signal has zero energy");
    }
    double residual = 0.0;
    for (std::size_t i = 0; i < clean.samples.size(); ++i) {
        const double d = noisy.samples[i] - clean.samples[i];
        residual += d * d;
    }
    if (residual == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(signal_energy / residual);
}

double ber(const Bits& sent, const Bits& recovered) {
    if (sent.size() != recovered.size()) {
        throw std::invalid_argument("ber: length mismatch");
    }
    if (sent.empty()) {
        throw std::invalid_argument("ber: empty bit sequences");
    }
    std::size_t flips = 0;
    for (std::size_t i = 0; i < sent.size(); ++i) {
        if ((sent[i] != 0) != (recovered[i] != 0)) ++flips;
    }
    return static_cast<double>(flips) / static_cast<double>(sent.size());
}

double gain_coefficient(const Signal& clean, const Signal& enhanced) {
    require_valid(clean, "gain_coefficient");
    require_valid(enhanced, "gain_coefficient");
    if (clean.samples.size() != enhanced.samples.size()) {
        throw std::invalid_argument("gain_coefficient: length mismatch");
    }
    const double ec = sum_sq(clean.samples);
    if (!(ec > 0.0)) {
        throw std::invalid_argument("gain_coefficient: clean signal has zero energy");
    }
    const double ee = sum_sq(enhanced.samples);
    if (ee == 0.0) return 0.0;
    double dot = 0.0;
    for (std::size_t i = 0; i < clean.samples.size(); ++i) {
        dot += clean.samples[i] * enhanced.samples[i];
    }
    const double rho = dot / (std::sqrt(ec) * std::sqrt(ee));
    if (rho <= 0.0) return 0.0;
    return std::min(rho * rho, 1.0);
}

AlignedFit align_to_reference(const Signal& clean, const Signal& enhanced,
                              std::size_t max_lag) {
    require_valid(clean, "align_to_reference");
    require_valid(enhanced, "align_to_reference");
    const std::size_t n = clean.samples.size();
    if (enhanced.samples.size() != n) {
        throw std::invalid_argument("align_to_reference: length mismatch");
    }
    if (max_lag >= n) {
        throw std::invalid_argument("align_to_reference: max_lag must be < signal length");
    }

    const auto& c = clean.samples;
    const auto& e = enhanced.samples;

    double best_abs_rho = -1.0;
    std::size_t best_lag = 0;
    double best_dot = 0.0, best_cc = 0.0, best_ee = 0.0;

    for (std::size_t lag = 0; lag <= max_lag; ++lag) {
        const std::size_t m = n - lag;
        double dot = 0.0, cc = 0.0, ee = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double ci = c[i];
            const double ei = e[i + lag];
            dot += ci * ei;
            cc += ci * ci;
            ee += ei * ei;
        }
        if (!(cc > 0.0) || !(ee > 0.0)) continue;
        const double abs_rho = std::abs(dot) / (std::sqrt(cc) * std::sqrt(ee));
        if (abs_rho > best_abs_rho) {
            best_abs_rho = abs_rho;
            best_lag = lag;
            best_dot = dot;
            best_cc = cc;
            best_ee = ee;
        }
    }
    if (best_abs_rho < 0.0) {
        throw std::invalid_argument("align_to_reference: degenerate inputs (zero energy)");
    }

    AlignedFit fit;
    fit.lag = best_lag;
    fit.scale = best_dot / best_ee;
    double residual = 0.0;
    {
        const std::size_t m = n - best_lag;
        for (std::size_t i = 0; i < m; ++i) {
            const double d = fit.scale * e[i + best_lag] - c[i];
            residual += d * d;
        }
    }
    fit.snr_db = residual == 0.0 ? std::numeric_limits<double>::infinity()
                                 : 10.0 * std::log10(best_cc / residual);
    fit.gain_alpha = std::min(best_abs_rho * best_abs_rho, 1.0);
    return fit;
}

}  // namespace sigenh
