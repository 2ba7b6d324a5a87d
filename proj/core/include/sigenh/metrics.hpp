#pragma once

#include <cstddef>

#include "sigenh/modulation.hpp"
#include "sigenh/signal.hpp"

namespace sigenh {

/// 10*log10(sum clean^2 / sum (noisy-clean)^2). Zero residual yields +inf;
/// zero clean energy is rejected.
double snr_db(const Signal& clean, const Signal& noisy);

/// Hamming distance / length. Equal non-empty lengths required.
double ber(const Bits& sent, const Bits& recovered);

/// Gain coefficient: squared normalized cross-correlation at lag 0, clamped
/// to 0 for anti-correlated inputs so that the score is 1 exactly when
/// `enhanced` is a positive scalar multiple of `clean`. Always in [0, 1];
/// zero-energy `enhanced` scores 0.
double gain_coefficient(const Signal& clean, const Signal& enhanced);

/// Best least-squares fit of `enhanced` onto `clean` over a delay search.
/// Enhancement stages renormalize amplitude and the linear-phase FIR delays
/// by its lag count, so output quality is measured after compensating an
/// integer delay and one signed scale factor.
struct AlignedFit {
    std::size_t lag = 0;    // delay of enhanced relative to clean, samples
    double scale = 1.0;     // signed least-squares amplitude factor
    double snr_db = 0.0;    // residual SNR after applying lag and scale
    double gain_alpha = 0.0;  // gain coefficient of the compensated fit
};

/// Searches lag in [0, max_lag]; max_lag must be < length(clean).
AlignedFit align_to_reference(const Signal& clean, const Signal& enhanced,
                              std::size_t max_lag);

}  // namespace sigenh
