#pragma once

#include <vector>

#include "sigenh/signal.hpp"

namespace sigenh::cumulant {

/// One-dimensional off-diagonal slice of the fourth-order cumulant,
/// c4(m) for m = 0..max_lag. Vanishes for Gaussian processes, which is what
/// makes the matched filter built from it noise-selective.
struct CumulantSlice {
    std::vector<double> values;  // length max_lag + 1
    int max_lag = 0;
};

/// Linear-phase FIR filter whose taps mirror a cumulant slice around the
/// center tap: taps[m] == taps[2L - m].
struct CumulantFilter {
    std::vector<double> taps;  // length 2 * max_lag + 1
    double gain = 1.0;
};

/// Slice estimator on the demeaned signal with per-lag normalization N - m:
///   c4(m) = mean[x^3(n) x(n+m)] - 3 * mean[x(n) x(n+m)] * mean[x^2(n)],
/// all means over n < N - m. Requires length(x) > 4 * max_lag.
CumulantSlice estimate_slice(const Signal& x, int max_lag);

/// taps[m] = c4(L - m) for m <= L, c4(m - L) above. All-zero slices are
/// rejected (degenerate filter).
CumulantFilter build_filter(const CumulantSlice& slice, double gain = 1.0);

/// Population excess kurtosis E[(x-mu)^4] / E[(x-mu)^2]^2 - 3.
double excess_kurtosis(const Signal& x);

/// Output gain 1/|excess kurtosis|. Near-Gaussian input (|kurtosis| < 1e-9)
/// is rejected; enhance() falls back to gain 1 on that path.
double gamma_gain(const Signal& x);

/// y(n) = gain * sum_m taps[m] * x(n - m), causal zero-padded convolution;
/// output length equals input length.
Signal apply(const CumulantFilter& filter, const Signal& x);

/// estimate_slice -> build_filter (gain from gamma_gain, 1 when rejected)
/// -> apply, all on the same input.
Signal enhance(const Signal& x, int max_lag);

}  // namespace sigenh::cumulant
