#pragma once

#include "sigenh/signal.hpp"

namespace sigenh::inp {

/// Impulse-noise preprocessor settings. The clipping threshold is derived
/// from the signal itself: tau_r = (1 + 2 * tau0) * median(|y|).
struct InpConfig {
    double tau0 = 1.5;
};

void validate(const InpConfig& cfg);

/// tau_r for this signal. Median of an even-length sequence is the mean of
/// the two central order statistics.
double threshold(const Signal& y, const InpConfig& cfg = {});

/// Inverse-square soft clip: samples with |y| <= tau_r pass through, larger
/// ones become y * (tau_r/|y|)^2. Sign-preserving; |out| <= tau_r always.
Signal clip(const Signal& y, double tau_r);

/// Peak normalization: out = y / max|y|. All-zero input is rejected.
Signal normalize(const Signal& y);

/// The full preprocessor: normalize(clip(y, threshold(y, cfg))).
Signal preprocess(const Signal& y, const InpConfig& cfg = {});

}  // namespace sigenh::inp
