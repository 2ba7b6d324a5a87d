#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sigenh/signal.hpp"

namespace sigenh::stft {

enum class Window { kRectangular, kHann };

struct StftParams {
    std::size_t frame_len = 256;
    std::size_t hop = 128;
    Window window = Window::kHann;
};

void validate(const StftParams& p);

/// Per-frame windowed DFT magnitudes and phases, frames x bins row-major
/// with bins == frame_len (full transform, so per-frame Parseval holds:
/// sum of squared magnitudes = frame_len * windowed-frame energy).
struct FrameSet {
    std::size_t frames = 0;
    std::size_t bins = 0;
    std::size_t frame_len = 0;
    std::size_t hop = 0;
    std::vector<double> magnitudes;
    std::vector<double> phases;

    std::span<const double> magnitude_frame(std::size_t n) const;
    std::span<const double> phase_frame(std::size_t n) const;
};

/// Frame count = floor((len - frame_len)/hop) + 1; signals shorter than one
/// frame are rejected.
FrameSet analyze(const Signal& s, const StftParams& p = {});

/// Squared Euclidean distance between two magnitude frames.
double frame_error(std::span<const double> est, std::span<const double> ref);

/// Concatenation of the 2N+1 magnitude frames centered at n (edge frames
/// clamp to the first/last frame), the input a frame-based estimator sees.
struct EstimatorContext {
    int context_half = 0;
    std::vector<double> x;  // length (2 * context_half + 1) * bins
};

EstimatorContext build_context(const FrameSet& frames, std::size_t n, int context_half);

using TimeDomainEnhancer = std::function<Signal(const Signal&)>;
using FrameEstimator = std::function<std::vector<double>(const EstimatorContext&)>;

/// Mean over frames of the squared magnitude-spectrum error between f(noisy)
/// and clean. For a time-domain enhancer the context width plays no role in
/// the computation; it is part of the record for frame-based estimators.
double estimator_error(const TimeDomainEnhancer& f, const Signal& noisy, const Signal& clean,
                       const StftParams& p = {}, int context_half = 0);

/// Frame-based form: the estimator maps each context window to a predicted
/// clean magnitude frame.
double estimator_error(const FrameEstimator& f, const Signal& noisy, const Signal& clean,
                       const StftParams& p, int context_half);

}  // namespace sigenh::stft
