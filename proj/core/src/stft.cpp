#include "sigenh/stft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sigenh/dft.hpp"

namespace sigenh::stft {

namespace {

std::vector<double> window_coefficients(Window window, std::size_t frame_len) {
    std::vector<double> w(frame_len, 1.0);
    if (window == Window::kHann) {
        // periodic Hann
        for (std::size_t n = 0; n < frame_len; ++n) {
            w[n] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(n) /
                                        static_cast<double>(frame_len));
        }
    }
    return w;
}

}  // namespace

void validate(const StftParams& p) {
    if (p.frame_len == 0) throw std::invalid_argument("StftParams: frame_len must be > 0");
    if (p.hop == 0 || p.hop > p.frame_len) {
        throw std::invalid_argument("StftParams: need 0 < hop <= frame_len");
    }
}

std::span<const double> FrameSet::magnitude_frame(std::size_t n) const {
    if (n >= frames) throw std::invalid_argument("FrameSet: frame index out of range");
    return {magnitudes.data() + n * bins, bins};
}

std::span<const double> FrameSet::phase_frame(std::size_t n) const {
    if (n >= frames) throw std::invalid_argument("FrameSet: frame index out of range");
    return {phases.data() + n * bins, bins};
}

FrameSet analyze(const Signal& s, const StftParams& p) {
    require_valid(s, "stft::analyze");
    validate(p);
    if (s.samples.size() < p.frame_len) {
        throw std::invalid_argument("stft::analyze: signal shorter than one frame");
    }

    FrameSet set;
    set.frame_len = p.frame_len;
    set.hop = p.hop;
    set.bins = p.frame_len;
    set.frames = (s.samples.size() - p.frame_len) / p.hop + 1;
    set.magnitudes.resize(set.frames * set.bins);
    set.phases.resize(set.frames * set.bins);

    const std::vector<double> w = window_coefficients(p.window, p.frame_len);
    std::vector<std::complex<double>> frame(p.frame_len);
    for (std::size_t f = 0; f < set.frames; ++f) {
        const std::size_t start = f * p.hop;
        for (std::size_t n = 0; n < p.frame_len; ++n) {
            frame[n] = std::complex<double>(w[n] * s.samples[start + n], 0.0);
        }
        const auto spectrum = fft(frame);
        for (std::size_t k = 0; k < set.bins; ++k) {
            set.magnitudes[f * set.bins + k] = std::abs(spectrum[k]);
            set.phases[f * set.bins + k] = std::arg(spectrum[k]);
        }
    }
    return set;
}

double frame_error(std::span<const double> est, std::span<const double> ref) {
    if (est.size() != ref.size()) {
        throw std::invalid_argument("frame_error: length mismatch");
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < est.size(); ++k) {
        const double d = est[k] - ref[k];
        acc += d * d;
    }
    return acc;
}

EstimatorContext build_context(const FrameSet& frames, std::size_t n, int context_half) {
    if (context_half < 0) throw std::invalid_argument("build_context: context_half must be >= 0");
    if (n >= frames.frames) throw std::invalid_argument("build_context: frame index out of range");

    EstimatorContext ctx;
    ctx.context_half = context_half;
    ctx.x.reserve((2 * static_cast<std::size_t>(context_half) + 1) * frames.bins);
    const long last = static_cast<long>(frames.frames) - 1;
    for (long f = static_cast<long>(n) - context_half; f <= static_cast<long>(n) + context_half;
         ++f) {
        const auto clamped = static_cast<std::size_t>(std::clamp<long>(f, 0, last));
        const auto row = frames.magnitude_frame(clamped);
        ctx.x.insert(ctx.x.end(), row.begin(), row.end());
    }
    return ctx;
}

double estimator_error(const TimeDomainEnhancer& f, const Signal& noisy, const Signal& clean,
                       const StftParams& p, int context_half) {
    if (!f) throw std::invalid_argument("estimator_error: empty enhancer");
    if (context_half < 0) {
        throw std::invalid_argument("estimator_error: context_half must be >= 0");
    }
    if (noisy.samples.size() != clean.samples.size()) {
        throw std::invalid_argument("estimator_error: length mismatch");
    }
    const Signal estimate = f(noisy);
    if (estimate.samples.size() != clean.samples.size()) {
        throw std::invalid_argument("estimator_error: enhancer changed the length");
    }
    const FrameSet est = analyze(estimate, p);
    const FrameSet ref = analyze(clean, p);

    double acc = 0.0;
    for (std::size_t n = 0; n < ref.frames; ++n) {
        acc += frame_error(est.magnitude_frame(n), ref.magnitude_frame(n));
    }
    return acc / static_cast<double>(ref.frames);
}

double estimator_error(const FrameEstimator& f, const Signal& noisy, const Signal& clean,
                       const StftParams& p, int context_half) {
    if (!f) throw std::invalid_argument("estimator_error: empty estimator");
    if (noisy.samples.size() != clean.samples.size()) {
        throw std::invalid_argument("estimator_error: length mismatch");
    }
    const FrameSet observed = analyze(noisy, p);
    const FrameSet ref = analyze(clean, p);

    double acc = 0.0;
    for (std::size_t n = 0; n < ref.frames; ++n) {
        const std::vector<double> est = f(build_context(observed, n, context_half));
        if (est.size() != ref.bins) {
            throw std::invalid_argument("estimator_error: estimator frame has wrong bin count");
        }
        acc += frame_error(est, ref.magnitude_frame(n));
    }
    return acc / static_cast<double>(ref.frames);
}

}  // namespace sigenh::stft
