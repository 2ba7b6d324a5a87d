#include "sigenh/cumulant.hpp"

#include <cmath>
#include <stdexcept>

namespace sigenh::cumulant {

CumulantSlice estimate_slice(const Signal& x, int max_lag) {
    require_valid(x, "cumulant::estimate_slice");
    if (max_lag < 0) throw std::invalid_argument("estimate_slice: max_lag must be >= 0");
    const std::size_t n = x.samples.size();
    if (n <= 4 * static_cast<std::size_t>(max_lag)) {
        throw std::invalid_argument("estimate_slice: need length > 4 * max_lag samples");
    }

    // demean in place on a copy
    std::vector<double> v = x.samples;
    double m = 0.0;
    for (double s : v) m += s;
    m /= static_cast<double>(n);
    for (double& s : v) s -= m;

    CumulantSlice slice;
    slice.max_lag = max_lag;
    slice.values.resize(static_cast<std::size_t>(max_lag) + 1);
    for (int lag = 0; lag <= max_lag; ++lag) {
        const std::size_t win = n - static_cast<std::size_t>(lag);
        double m31 = 0.0;  // mean of x^3(n) x(n+m)
        double m11 = 0.0;  // mean of x(n) x(n+m)
        double m20 = 0.0;  // mean of x^2(n)
        for (std::size_t t = 0; t < win; ++t) {
            const double a = v[t];
            const double b = v[t + static_cast<std::size_t>(lag)];
            m31 += a * a * a * b;
            m11 += a * b;
            m20 += a * a;
        }
        const double inv = 1.0 / static_cast<double>(win);
        m31 *= inv;
        m11 *= inv;
        m20 *= inv;
        slice.values[static_cast<std::size_t>(lag)] = m31 - 3.0 * m11 * m20;
    }
    return slice;
}

CumulantFilter build_filter(const CumulantSlice& slice, double gain) {
    const int lag_count = slice.max_lag;
    if (slice.values.size() != static_cast<std::size_t>(lag_count) + 1) {
        throw std::invalid_argument("build_filter: slice length must be max_lag + 1");
    }
    bool all_zero = true;
    for (double v : slice.values) {
        if (!std::isfinite(v)) throw std::invalid_argument("build_filter: non-finite slice");
        if (v != 0.0) all_zero = false;
    }
    if (all_zero) {
        throw std::invalid_argument("build_filter: all-zero slice (degenerate filter)");
    }
    if (!std::isfinite(gain)) throw std::invalid_argument("build_filter: non-finite gain");

    CumulantFilter f;
    f.gain = gain;
    f.taps.resize(2 * static_cast<std::size_t>(lag_count) + 1);
    for (int tap = 0; tap <= lag_count; ++tap) {
        f.taps[static_cast<std::size_t>(tap)] = slice.values[static_cast<std::size_t>(lag_count - tap)];
    }
    for (int tap = lag_count + 1; tap <= 2 * lag_count; ++tap) {
        f.taps[static_cast<std::size_t>(tap)] = slice.values[static_cast<std::size_t>(tap - lag_count)];
    }
    return f;
}

double excess_kurtosis(const Signal& x) {
    require_valid(x, "cumulant::excess_kurtosis");
    const std::size_t n = x.samples.size();
    double m = 0.0;
    for (double v : x.samples) m += v;
    m /= static_cast<double>(n);
    double m2 = 0.0, m4 = 0.0;
    for (double v : x.samples) {
        const double d = v - m;
        const double d2 = d * d;
        m2 += d2;
        m4 += d2 * d2;
    }
    m2 /= static_cast<double>(n);
    m4 /= static_cast<double>(n);
    if (!(m2 > 0.0)) {
        throw std::invalid_argument("excess_kurtosis: constant signal");
    }
    return m4 / (m2 * m2) - 3.0;
}

double gamma_gain(const Signal& x) {
    const double kurt = std::abs(excess_kurtosis(x));
    if (kurt < 1e-9) {
        throw std::invalid_argument("gamma_gain: near-Gaussian input, gain unbounded");
    }
    return 1.0 / kurt;
}

Signal apply(const CumulantFilter& filter, const Signal& x) {
    require_valid(x, "cumulant::apply");
    if (filter.taps.empty() || filter.taps.size() % 2 == 0) {
        throw std::invalid_argument("cumulant::apply: taps length must be odd and non-zero");
    }
    const std::size_t n = x.samples.size();
    const std::size_t taps = filter.taps.size();
    Signal out = x;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t reach = std::min(i + 1, taps);
        double acc = 0.0;
        for (std::size_t tap = 0; tap < reach; ++tap) {
            acc += filter.taps[tap] * x.samples[i - tap];
        }
        out.samples[i] = filter.gain * acc;
    }
    return out;
}

Signal enhance(const Signal& x, int max_lag) {
    const CumulantSlice slice = estimate_slice(x, max_lag);
    double gain = 1.0;
    try {
        gain = gamma_gain(x);
    } catch (const std::invalid_argument&) {
        // near-Gaussian input: keep unit gain rather than blowing up
    }
    return apply(build_filter(slice, gain), x);
}

}  // namespace sigenh::cumulant
