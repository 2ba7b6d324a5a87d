#include "sigenh/nlm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sigenh::nlm {

namespace {

// Whole-sample mirror: ...y[2] y[1] | y[0] y[1] ... y[n-1] | y[n-2] y[n-3]...
std::size_t reflect_index(long idx, long n) {
    if (n == 1) return 0;
    const long period = 2 * (n - 1);
    long m = idx % period;
    if (m < 0) m += period;
    if (m >= n) m = period - m;
    return static_cast<std::size_t>(m);
}

std::vector<double> patch_kernel(int patch_half_width, double kernel_sigma) {
    const int len = 2 * patch_half_width + 1;
    std::vector<double> a(static_cast<std::size_t>(len));
    if (kernel_sigma <= 0.0) {
        std::fill(a.begin(), a.end(), 1.0 / len);
        return a;
    }
    double sum = 0.0;
    for (int k = -patch_half_width; k <= patch_half_width; ++k) {
        const double v = std::exp(-0.5 * k * k / (kernel_sigma * kernel_sigma));
        a[static_cast<std::size_t>(k + patch_half_width)] = v;
        sum += v;
    }
    for (double& v : a) v /= sum;
    return a;
}

// Signal extended by P mirrored samples on each side; the patch centered at
// sample i spans ext[i .. i + 2P].
std::vector<double> extend_mirrored(const std::vector<double>& y, int patch_half_width) {
    const long n = static_cast<long>(y.size());
    std::vector<double> ext(y.size() + 2 * static_cast<std::size_t>(patch_half_width));
    for (long t = 0; t < static_cast<long>(ext.size()); ++t) {
        ext[static_cast<std::size_t>(t)] = y[reflect_index(t - patch_half_width, n)];
    }
    return ext;
}

struct Workspace {
    std::vector<double> ext;
    std::vector<double> kernel;
    double h_sq = 1.0;
    long n = 0;
    long search = 0;
    bool full = false;
};

Workspace make_workspace(const Signal& y, const NlmConfig& cfg) {
    Workspace ws;
    ws.ext = extend_mirrored(y.samples, cfg.patch_half_width);
    ws.kernel = patch_kernel(cfg.patch_half_width, cfg.kernel_sigma);
    const double h = resolve_h(y, cfg);
    ws.h_sq = h * h;
    ws.n = static_cast<long>(y.samples.size());
    ws.search = cfg.search_half_width;
    ws.full = cfg.full_signal_search;
    return ws;
}

void window_of(const Workspace& ws, long i, long& j0, long& j1) {
    if (ws.full) {
        j0 = 0;
        j1 = ws.n - 1;
    } else {
        j0 = std::max<long>(0, i - ws.search);
        j1 = std::min<long>(ws.n - 1, i + ws.search);
    }
}

double patch_distance_at(const Workspace& ws, long i, long j) {
    const std::size_t taps = ws.kernel.size();
    double d = 0.0;
    for (std::size_t k = 0; k < taps; ++k) {
        const double diff = ws.ext[static_cast<std::size_t>(i) + k] -
                            ws.ext[static_cast<std::size_t>(j) + k];
        d += ws.kernel[k] * diff * diff;
    }
    return d;
}

double denoise_one(const Workspace& ws, const std::vector<double>& y, long i) {
    long j0, j1;
    window_of(ws, i, j0, j1);
    double z = 0.0, acc = 0.0;
    for (long j = j0; j <= j1; ++j) {
        const double e = std::exp(-patch_distance_at(ws, i, j) / ws.h_sq);
        z += e;
        acc += e * y[static_cast<std::size_t>(j)];
    }
    return acc / z;
}

}  // namespace

NlmConfig config_for_patch(int patch_half_width) {
    NlmConfig cfg;
    cfg.patch_half_width = patch_half_width;
    cfg.search_half_width = 16 * patch_half_width;
    return cfg;
}

void validate(const NlmConfig& cfg) {
    if (cfg.patch_half_width < 0) {
        throw std::invalid_argument("NlmConfig: patch_half_width must be >= 0");
    }
    if (!cfg.full_signal_search && cfg.search_half_width < cfg.patch_half_width) {
        throw std::invalid_argument("NlmConfig: search_half_width must be >= patch_half_width");
    }
    if (!(cfg.h >= 0.0)) throw std::invalid_argument("NlmConfig: h must be >= 0");
    if (!(cfg.kernel_sigma >= 0.0)) {
        throw std::invalid_argument("NlmConfig: kernel_sigma must be >= 0");
    }
}

double estimate_noise_sigma(const Signal& y) {
    require_valid(y, "nlm::estimate_noise_sigma");
    const auto& s = y.samples;
    if (s.size() < 2) return 0.0;
    std::vector<double> d(s.size() - 1);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) d[i] = s[i + 1] - s[i];

    auto median_of = [](std::vector<double> v) {
        const std::size_t hi = v.size() / 2;
        std::nth_element(v.begin(), v.begin() + hi, v.end());
        const double upper = v[hi];
        if (v.size() % 2 == 1) return upper;
        const double lower = *std::max_element(v.begin(), v.begin() + hi);
        return 0.5 * (lower + upper);
    };

    const double m = median_of(d);
    for (double& v : d) v = std::abs(v - m);
    const double mad = median_of(std::move(d));
    return mad / (0.6745 * std::sqrt(2.0));
}

double resolve_h(const Signal& y, const NlmConfig& cfg) {
    if (cfg.h > 0.0) return cfg.h;
    // Floor keeps the exponent well defined on noiseless input, where every
    // in-window distance is tiny anyway.
    return std::max(0.6 * estimate_noise_sigma(y), 1e-12);
}

double patch_distance(const Signal& y, std::size_t i, std::size_t j, const NlmConfig& cfg) {
    require_valid(y, "nlm::patch_distance");
    validate(cfg);
    if (i >= y.samples.size() || j >= y.samples.size()) {
        throw std::invalid_argument("nlm::patch_distance: index out of range");
    }
    const Workspace ws = make_workspace(y, cfg);
    return patch_distance_at(ws, static_cast<long>(i), static_cast<long>(j));
}

WeightWindow weights(const Signal& y, std::size_t i, const NlmConfig& cfg) {
    require_valid(y, "nlm::weights");
    validate(cfg);
    if (i >= y.samples.size()) {
        throw std::invalid_argument("nlm::weights: index out of range");
    }
    const Workspace ws = make_workspace(y, cfg);
    long j0, j1;
    window_of(ws, static_cast<long>(i), j0, j1);

    WeightWindow out;
    out.first = static_cast<std::size_t>(j0);
    out.w.resize(static_cast<std::size_t>(j1 - j0 + 1));
    double z = 0.0;
    for (long j = j0; j <= j1; ++j) {
        const double e = std::exp(-patch_distance_at(ws, static_cast<long>(i), j) / ws.h_sq);
        out.w[static_cast<std::size_t>(j - j0)] = e;
        z += e;
    }
    for (double& w : out.w) w /= z;
    return out;
}

Signal denoise(const Signal& y, const NlmConfig& cfg) {
    require_valid(y, "nlm::denoise");
    validate(cfg);
    Signal out = y;
    denoise_range(y, cfg, 0, y.samples.size(), out.samples);
    return out;
}

void denoise_range(const Signal& y, const NlmConfig& cfg, std::size_t i0, std::size_t i1,
                   std::vector<double>& out) {
    require_valid(y, "nlm::denoise_range");
    validate(cfg);
    if (i1 > y.samples.size() || i0 > i1) {
        throw std::invalid_argument("nlm::denoise_range: bad index range");
    }
    if (out.size() != y.samples.size()) {
        throw std::invalid_argument("nlm::denoise_range: output size mismatch");
    }
    const Workspace ws = make_workspace(y, cfg);
    for (std::size_t i = i0; i < i1; ++i) {
        out[i] = denoise_one(ws, y.samples, static_cast<long>(i));
    }
}

}  // namespace sigenh::nlm
