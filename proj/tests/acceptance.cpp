// Acceptance suite: runs every contract criterion end to end and prints one
// pass/fail line per criterion. Exits with the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sigenh/bsr.hpp"
#include "sigenh/cumulant.hpp"
#include "sigenh/detect.hpp"
#include "sigenh/dft.hpp"
#include "sigenh/inp.hpp"
#include "sigenh/metrics.hpp"
#include "sigenh/nlm.hpp"
#include "sigenh/noise.hpp"
#include "sigenh/pipeline.hpp"
#include "sigenh/rng.hpp"
#include "sigenh/stft.hpp"

using namespace sigenh;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

Signal random_signal(std::uint64_t seed, std::size_t n, double sigma = 1.0) {
    auto rng = make_rng(seed);
    std::normal_distribution<double> dist(0.0, sigma);
    Signal s;
    s.samples.resize(n);
    for (double& v : s.samples) v = dist(rng);
    return s;
}

Signal unit_sine(std::size_t n, double carrier = 1000.0, std::uint32_t rate = 8000) {
    Signal s;
    s.sample_rate = rate;
    s.samples.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        s.samples[t] = std::sin(2.0 * std::numbers::pi * carrier * t / rate);
    }
    return s;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

// --- 1: non-local means vs the naive triple-loop reference ------------------

std::vector<double> naive_nlm(const std::vector<double>& y, int P, int S, double h,
                              double kernel_sigma) {
    const long n = static_cast<long>(y.size());
    auto reflect = [n](long idx) {
        if (n == 1) return 0L;
        while (idx < 0 || idx >= n) {
            if (idx < 0) idx = -idx;
            if (idx >= n) idx = 2 * (n - 1) - idx;
        }
        return idx;
    };
    std::vector<double> kernel(static_cast<std::size_t>(2 * P + 1));
    if (kernel_sigma <= 0.0) {
        for (double& a : kernel) a = 1.0 / static_cast<double>(2 * P + 1);
    } else {
        double norm = 0.0;
        for (int k = -P; k <= P; ++k) {
            kernel[static_cast<std::size_t>(k + P)] =
                std::exp(-0.5 * k * k / (kernel_sigma * kernel_sigma));
            norm += kernel[static_cast<std::size_t>(k + P)];
        }
        for (double& a : kernel) a /= norm;
    }
    std::vector<double> out(y.size());
    for (long i = 0; i < n; ++i) {
        double z = 0.0, acc = 0.0;
        for (long j = std::max(0L, i - S); j <= std::min(n - 1, i + S); ++j) {
            double d = 0.0;
            for (int k = -P; k <= P; ++k) {
                const double diff = y[static_cast<std::size_t>(reflect(i + k))] -
                                    y[static_cast<std::size_t>(reflect(j + k))];
                d += kernel[static_cast<std::size_t>(k + P)] * diff * diff;
            }
            const double w = std::exp(-d / (h * h));
            z += w;
            acc += w * y[static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(i)] = acc / z;
    }
    return out;
}

Outcome criterion_nlm_oracle() {
    const auto start = Clock::now();
    double max_dev = 0.0;
    std::uint64_t seed = 1;
    std::size_t cases = 0;
    for (int P : {1, 2, 4}) {
        for (int S = P; S <= 8; ++S) {
            for (int rep = 0; rep < 10; ++rep) {
                const std::size_t len = 8 + (seed * 7) % 57;  // up to 64
                const Signal y = random_signal(seed, len);
                const double h = 0.3 + 0.1 * static_cast<double>(seed % 10);
                const double kernel_sigma = rep % 2 == 0 ? 0.0 : 1.5;
                ++seed;
                ++cases;

                nlm::NlmConfig cfg;
                cfg.patch_half_width = P;
                cfg.search_half_width = S;
                cfg.h = h;
                cfg.kernel_sigma = kernel_sigma;
                const Signal got = nlm::denoise(y, cfg);
                const auto expected = naive_nlm(y.samples, P, S, h, kernel_sigma);
                for (std::size_t i = 0; i < len; ++i) {
                    max_dev = std::max(max_dev, std::abs(got.samples[i] - expected[i]));
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    Outcome o;
    o.pass = max_dev <= 1e-12 && elapsed < 10.0 && cases >= 200;
    o.detail = fmt("max|dev|=%.2e over %.0f cases, %.2f s (limits 1e-12, 10 s)", max_dev,
                   static_cast<double>(cases), elapsed);
    return o;
}

// --- 2: INP algebra ----------------------------------------------------------

Outcome criterion_inp_algebra() {
    Outcome o;
    auto expect = [&](double got, double want, const char* what) {
        if (got != want) {
            o.pass = false;
            o.detail += std::string(what) + " mismatch; ";
        }
    };
    auto sig = [](std::vector<double> v) {
        Signal s;
        s.samples = std::move(v);
        return s;
    };
    expect(inp::threshold(sig({1, 1, 1, 1})), 4.0, "even-length threshold");
    expect(inp::threshold(sig({-2, 1, 3})), 8.0, "odd-length threshold");
    expect(inp::threshold(sig({1, 2, 3, 4})), 10.0, "central-mean threshold");
    expect(inp::threshold(sig({-2, 1, 3}), inp::InpConfig{0.0}), 2.0, "tau0=0 threshold");

    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 1000 && o.pass; ++seed) {
        Signal y = random_signal(seed, 16 + seed % 240);
        if (seed % 3 == 0) {  // salt in impulses
            for (std::size_t i = 0; i < y.samples.size(); i += 17) y.samples[i] *= 50.0;
        }
        const double tau = inp::threshold(y);
        if (!(tau > 0.0)) continue;
        const Signal once = inp::clip(y, tau);
        const Signal twice = inp::clip(once, tau);
        Signal neg = y;
        for (double& v : neg.samples) v = -v;
        const Signal neg_clipped = inp::clip(neg, tau);
        for (std::size_t i = 0; i < y.samples.size(); ++i) {
            if (twice.samples[i] != once.samples[i] ||
                neg_clipped.samples[i] != -once.samples[i] ||
                std::abs(once.samples[i]) > tau) {
                o.pass = false;
                o.detail = "algebra violated at seed " + std::to_string(seed);
                break;
            }
        }
        ++checked;
    }
    if (o.pass) {
        o.detail = "thresholds exact, " + std::to_string(checked) +
                   " random signals idempotent/odd/bounded";
    }
    return o;
}

// --- 3: cumulant estimator ----------------------------------------------------

Outcome criterion_cumulant() {
    Outcome o;
    const Signal sine = unit_sine(100000);
    const double c40 = cumulant::estimate_slice(sine, 2).values[0];
    if (std::abs(c40 - (-0.375)) > 0.01) {
        o.pass = false;
        o.detail = fmt("sinusoid c4(0)=%.5f outside -0.375 +- 0.01; ", c40);
    }

    constexpr int kLags = 16;
    double small_mean = 0.0, big_mean = 0.0;
    std::vector<double> small_peaks, big_peaks;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto peak = [](const cumulant::CumulantSlice& s) {
            double p = 0.0;
            for (double v : s.values) p = std::max(p, std::abs(v));
            return p;
        };
        small_peaks.push_back(
            peak(cumulant::estimate_slice(random_signal(seed, 10000), kLags)));
        big_peaks.push_back(
            peak(cumulant::estimate_slice(random_signal(seed + 50, 100000), kLags)));
        small_mean += small_peaks.back();
        big_mean += big_peaks.back();
    }
    small_mean /= 20.0;
    big_mean /= 20.0;
    auto spread = [](const std::vector<double>& v, double m) {
        double acc = 0.0;
        for (double x : v) acc += (x - m) * (x - m);
        return std::sqrt(acc / static_cast<double>(v.size()));
    };
    const double small_sd = spread(small_peaks, small_mean);
    const double big_sd = spread(big_peaks, big_mean);
    if (!(big_mean < small_mean && big_sd < small_sd)) {
        o.pass = false;
        o.detail += "Gaussian slice magnitudes did not shrink with N";
    }
    if (o.pass) {
        o.detail = fmt("c4(0)=%.4f; Gaussian peak %.4f@1e4 -> %.4f@1e5 over 20 seeds", c40,
                       small_mean, big_mean);
    }
    return o;
}

// --- 4: FIR contract ----------------------------------------------------------

Outcome criterion_fir() {
    Outcome o;
    auto rng = make_rng(404);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int rep = 0; rep < 200 && o.pass; ++rep) {
        cumulant::CumulantSlice slice;
        slice.max_lag = rep % 12;
        slice.values.resize(static_cast<std::size_t>(slice.max_lag) + 1);
        for (double& v : slice.values) v = dist(rng);
        slice.values[0] += 1e-6;  // keep it away from the all-zero rejection
        const auto f = cumulant::build_filter(slice);
        for (std::size_t m = 0; m < f.taps.size(); ++m) {
            if (f.taps[m] != f.taps[f.taps.size() - 1 - m]) {
                o.pass = false;
                o.detail = "mirror symmetry broken";
            }
        }
    }

    double max_dev = 0.0;
    for (int rep = 0; rep < 200; ++rep) {
        cumulant::CumulantFilter f;
        f.taps.resize(static_cast<std::size_t>(2 * (rep % 6) + 1));
        for (double& t : f.taps) t = dist(rng);
        f.gain = dist(rng);
        Signal x;
        x.samples.resize(1 + rep % 32);
        for (double& v : x.samples) v = dist(rng);
        const Signal got = cumulant::apply(f, x);
        for (std::size_t i = 0; i < x.samples.size(); ++i) {
            double acc = 0.0;
            for (std::size_t m = 0; m < f.taps.size() && m <= i; ++m) {
                acc += f.taps[m] * x.samples[i - m];
            }
            max_dev = std::max(max_dev, std::abs(got.samples[i] - f.gain * acc));
        }
    }
    if (max_dev > 1e-12) {
        o.pass = false;
        o.detail += fmt("convolution oracle deviation %.2e", max_dev);
    }
    if (o.pass) o.detail = fmt("symmetry exact, conv oracle max|dev|=%.2e", max_dev);
    return o;
}

// --- 5: stochastic resonance signature ----------------------------------------

Outcome criterion_stochastic_resonance() {
    const auto start = Clock::now();
    bsr::BsrSystem sys;  // a = b = 1, dt = 0.05, x0 = 1
    ModulationSpec drive_spec;
    drive_spec.carrier_hz = 1.0 / 128.0;
    const Signal drive = scaled(generate(drive_spec, 4, 2048.0), 0.25);

    constexpr int kGrid = 12;
    std::vector<double> mean_power(kGrid, 0.0);
    for (int g = 0; g < kGrid; ++g) {
        const double sigma = 0.05 + g * (1.45 / (kGrid - 1));
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            NoiseSpec noise;
            noise.gaussian_sigma = sigma;
            noise.rng_seed = derive_seed(seed, static_cast<std::uint64_t>(g));
            const Signal out = bsr::integrate(sys, add_noise(drive, noise));
            mean_power[static_cast<std::size_t>(g)] +=
                carrier_bin_power(out, drive_spec.carrier_hz);
        }
        mean_power[static_cast<std::size_t>(g)] /= 10.0;
    }
    const auto peak = std::max_element(mean_power.begin(), mean_power.end());
    const auto peak_index = static_cast<int>(peak - mean_power.begin());
    const double elapsed = seconds_since(start);

    Outcome o;
    o.pass = peak_index > 0 && peak_index < kGrid - 1 && elapsed < 60.0;
    o.detail = fmt("drive-bin power peaks at grid index %.0f of 0..11, %.1f s (limit 60 s)",
                   static_cast<double>(peak_index), elapsed);
    return o;
}

// --- 6: receptive fields -------------------------------------------------------

Outcome criterion_receptive_fields() {
    Outcome o;
    o.pass = detect::receptive_field(1) == 3 && detect::receptive_field(2) == 7 &&
             detect::receptive_field(3) == 15;
    o.detail = fmt("layers 1..3 span %.0f, %.0f, %.0f",
                   static_cast<double>(detect::receptive_field(1)),
                   static_cast<double>(detect::receptive_field(2)),
                   static_cast<double>(detect::receptive_field(3)));
    return o;
}

// --- 7: fig5-shaped SNR gain ----------------------------------------------------

Outcome criterion_fig5_gain() {
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = 1; s <= 10; ++s) seeds.push_back(s);
    const auto rows = pipeline::run_experiment("fig5", seeds);

    Outcome o;
    double mean_gain = 0.0, worst_gain = 1e9;
    for (const auto& row : rows) {
        if (row.snr_in_db < 0.8 || row.snr_in_db > 1.4) {
            o.pass = false;
            o.detail += fmt("input SNR %.3f outside 1.1 +- 0.3; ", row.snr_in_db);
        }
        const double gain = row.snr_out_db - row.snr_in_db;
        mean_gain += gain;
        worst_gain = std::min(worst_gain, gain);
    }
    mean_gain /= static_cast<double>(rows.size());
    if (worst_gain < 6.0) o.pass = false;
    o.detail += fmt("gain over 10 seeds: mean %.2f dB, worst %.2f dB (threshold 6 dB)",
                    mean_gain, worst_gain);
    return o;
}

// --- 8: sqrt(N) coherent averaging law ------------------------------------------

Outcome criterion_averaging_law() {
    const Signal clean = unit_sine(8192);
    Outcome o;
    std::string parts;
    for (std::size_t count : {std::size_t{4}, std::size_t{16}}) {
        double mean_gain = 0.0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            std::vector<Signal> copies;
            for (std::size_t k = 0; k < count; ++k) {
                const NoiseSpec spec =
                    noise_for_snr(clean, 0.0, 0.0, 0.0, derive_seed(seed, count * 100 + k));
                copies.push_back(add_noise(clean, spec));
            }
            const double single = snr_db(clean, copies.front());
            const double averaged = snr_db(clean, pipeline::coherent_average(copies));
            mean_gain += averaged - single;
        }
        mean_gain /= 20.0;
        const double expected = 10.0 * std::log10(static_cast<double>(count));
        if (std::abs(mean_gain - expected) > 1.0) o.pass = false;
        parts += fmt("N=%.0f: %.2f dB (law %.2f +- 1); ", static_cast<double>(count),
                     mean_gain, expected);
    }
    o.detail = parts;
    return o;
}

// --- 9: BER shape over channel SNR ----------------------------------------------

Outcome criterion_ber_shape() {
    const auto rows = pipeline::run_experiment("ber", {1, 2, 3});
    const std::vector<std::string> grid{"snr=-5", "snr=0", "snr=5", "snr=10"};
    std::vector<double> mean_ber(grid.size(), 0.0);
    std::vector<int> hits(grid.size(), 0);
    for (const auto& row : rows) {
        for (std::size_t g = 0; g < grid.size(); ++g) {
            if (row.param == grid[g] && row.ber.has_value()) {
                mean_ber[g] += *row.ber;
                ++hits[g];
            }
        }
    }
    Outcome o;
    std::string parts;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        if (hits[g] == 0) {
            o.pass = false;
            continue;
        }
        mean_ber[g] /= hits[g];
        if (g > 0 && mean_ber[g] > mean_ber[g - 1] + 1e-12) o.pass = false;
        parts += fmt("%.3f%% ", 100.0 * mean_ber[g]);
    }
    if (mean_ber.back() > 0.02) o.pass = false;
    o.detail = "mean BER over {-5,0,5,10} dB: " + parts + "(10 dB limit 2%)";
    return o;
}

// --- 10: timing scales linearly --------------------------------------------------

Outcome criterion_timing_shape() {
    std::vector<std::size_t> counts;
    for (std::size_t c = 1000; c <= 5000; c += 500) counts.push_back(c);
    const auto rows = pipeline::bench_timing(counts, 1024, pipeline::PipelineConfig{}, 1);

    // least-squares fit wall = a + b * count
    const double n = static_cast<double>(rows.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& row : rows) {
        const double x = static_cast<double>(row.count);
        sx += x;
        sy += row.wall_time_s;
        sxx += x * x;
        sxy += x * row.wall_time_s;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    for (const auto& row : rows) {
        const double fitted = intercept + slope * static_cast<double>(row.count);
        ss_res += (row.wall_time_s - fitted) * (row.wall_time_s - fitted);
        ss_tot += (row.wall_time_s - sy / n) * (row.wall_time_s - sy / n);
    }
    const double r2 = 1.0 - ss_res / ss_tot;

    Outcome o;
    o.pass = r2 >= 0.95;
    o.detail = fmt("R^2=%.4f over 9 batch sizes (limit 0.95); 5000-signal batch took %.2f s",
                   r2, rows.back().wall_time_s);
    return o;
}

// --- 11: STFT and softmax sanity --------------------------------------------------

Outcome criterion_stft_sanity() {
    Outcome o;
    const Signal s = random_signal(7, 4096);
    const auto identity = [](const Signal& in) { return in; };
    const double err = stft::estimator_error(identity, s, s);
    if (err != 0.0) {
        o.pass = false;
        o.detail += fmt("identity estimator error %.2e != 0; ", err);
    }

    stft::StftParams p;
    const auto frames = stft::analyze(s, p);
    double worst_parseval = 0.0;
    for (std::size_t f = 0; f < frames.frames; ++f) {
        double spectral = 0.0;
        for (double m : frames.magnitude_frame(f)) spectral += m * m;
        double windowed = 0.0;
        for (std::size_t t = 0; t < p.frame_len; ++t) {
            const double w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * t /
                                                  static_cast<double>(p.frame_len));
            const double v = w * s.samples[f * p.hop + t];
            windowed += v * v;
        }
        const double rhs = static_cast<double>(p.frame_len) * windowed;
        worst_parseval = std::max(worst_parseval, std::abs(spectral - rhs) / rhs);
    }
    if (worst_parseval > 1e-9) {
        o.pass = false;
        o.detail += fmt("Parseval deviation %.2e; ", worst_parseval);
    }

    auto rng = make_rng(11);
    std::uniform_real_distribution<double> logit(-40.0, 40.0);
    double worst_sum = 0.0;
    for (int rep = 0; rep < 100000; ++rep) {
        const auto out = detect::softmax2(logit(rng), logit(rng));
        worst_sum = std::max(worst_sum, std::abs(out.p_signal + out.p_noise - 1.0));
    }
    if (worst_sum > 1e-12) {
        o.pass = false;
        o.detail += fmt("softmax sum deviation %.2e; ", worst_sum);
    }
    if (o.pass) {
        o.detail = fmt("identity error 0, Parseval<=%.1e, softmax sum dev<=%.1e",
                       worst_parseval, worst_sum);
    }
    return o;
}

// --- 12: forward Euler order ------------------------------------------------------

Outcome criterion_euler_order() {
    auto final_state = [](double dt) {
        bsr::BsrSystem sys;
        sys.dt = dt;
        sys.x0 = 0.5;
        Signal zeros;
        zeros.sample_rate = 16;
        zeros.samples.assign(32, 0.0);  // 2 s of the noise-free double well
        return bsr::integrate(sys, zeros).samples.back();
    };
    const double reference = final_state((1.0 / 32.0) / 64.0);
    const double err_full = std::abs(final_state(1.0 / 32.0) - reference);
    const double err_half = std::abs(final_state(1.0 / 64.0) - reference);
    const double ratio = err_full / err_half;

    Outcome o;
    o.pass = ratio >= 1.5 && ratio <= 2.5;
    o.detail = fmt("error-halving ratio %.3f against a dt/64 reference (window [1.5, 2.5])",
                   ratio);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"nlm-oracle-equivalence", criterion_nlm_oracle},
        {"inp-algebra", criterion_inp_algebra},
        {"cumulant-correctness", criterion_cumulant},
        {"fir-contract", criterion_fir},
        {"stochastic-resonance-signature", criterion_stochastic_resonance},
        {"receptive-fields", criterion_receptive_fields},
        {"fig5-snr-gain", criterion_fig5_gain},
        {"sqrt-n-averaging-law", criterion_averaging_law},
        {"ber-shape", criterion_ber_shape},
        {"timing-shape", criterion_timing_shape},
        {"stft-softmax-sanity", criterion_stft_sanity},
        {"bsr-euler-order", criterion_euler_order},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        if (!outcome.pass) ++failures;
        std::printf("[%s] %02zu %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, outcome.detail.c_str());
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    } else {
        std::printf("%d of %zu acceptance criteria FAILED\n", failures, criteria.size());
    }
    return failures;
}
