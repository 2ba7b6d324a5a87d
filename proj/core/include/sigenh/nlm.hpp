#pragma once

#include <cstddef>
#include <vector>

#include "sigenh/signal.hpp"

namespace sigenh::nlm {

/// Non-local means over 1D sample sequences. Each output sample is a convex
/// combination of candidates whose surrounding patches resemble its own;
/// weights decay as exp(-d/h^2) in the weighted squared patch distance d.
struct NlmConfig {
    int patch_half_width = 2;     // P: patch covers 2P+1 samples
    int search_half_width = 32;   // S: candidate window covers 2S+1 samples
    bool full_signal_search = false;
    /// Smoothing parameter. 0 means "derive from the input": h = 0.6 * sigma
    /// with sigma the robust noise estimate of estimate_noise_sigma().
    double h = 0.0;
    /// Std of the Gaussian patch kernel in samples; 0 selects the uniform
    /// kernel 1/(2P+1).
    double kernel_sigma = 0.0;
};

/// Config with the default search rule S = 16 * P.
NlmConfig config_for_patch(int patch_half_width);

void validate(const NlmConfig& cfg);

/// Robust noise std: MAD of first differences / (sqrt(2) * 0.6745).
double estimate_noise_sigma(const Signal& y);

/// The h actually used by denoise() for this input (resolves h == 0).
double resolve_h(const Signal& y, const NlmConfig& cfg);

/// Weighted squared Euclidean distance between the patches centered at i and
/// j. The kernel is normalized to sum 1; boundaries are handled by mirror
/// extension (whole-sample reflection) of the signal.
double patch_distance(const Signal& y, std::size_t i, std::size_t j, const NlmConfig& cfg);

struct WeightWindow {
    std::size_t first = 0;   // index of the first candidate
    std::vector<double> w;   // normalized weights for [first, first + size)
};

/// Normalized weights w(i, j) over the candidate window of i (clamped at the
/// signal ends; full signal when cfg.full_signal_search). Non-negative,
/// summing to 1; the self term j == i is included.
WeightWindow weights(const Signal& y, std::size_t i, const NlmConfig& cfg);

/// out(i) = sum_j w(i, j) * y(j). Output length equals input length.
Signal denoise(const Signal& y, const NlmConfig& cfg);

/// Fills out[i0, i1) only, leaving the rest untouched. Per-index results are
/// independent, so disjoint ranges computed in any order (or concurrently)
/// reproduce denoise() bit for bit.
void denoise_range(const Signal& y, const NlmConfig& cfg, std::size_t i0, std::size_t i1,
                   std::vector<double>& out);

}  // namespace sigenh::nlm
