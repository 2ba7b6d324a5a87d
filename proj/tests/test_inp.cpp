#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sigenh/inp.hpp"
#include "sigenh/rng.hpp"

using namespace sigenh;

namespace {

Signal make(std::vector<double> v) {
    Signal s;
    s.samples = std::move(v);
    return s;
}

Signal random_signal(std::uint64_t seed, std::size_t n, double impulse_scale = 10.0) {
    auto rng = make_rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Signal s;
    s.samples.resize(n);
    for (double& v : s.samples) {
        v = dist(rng);
        if (u(rng) < 0.05) v *= impulse_scale;
    }
    return s;
}

}  // namespace

TEST_CASE("threshold: hand-computed medians") {
    CHECK(inp::threshold(make({1.0, 1.0, 1.0, 1.0})) == 4.0);
    CHECK(inp::threshold(make({-2.0, 1.0, 3.0})) == 8.0);
    // even length: mean of the two central order statistics
    CHECK(inp::threshold(make({1.0, 2.0, 3.0, 4.0})) == 10.0);
    CHECK(inp::threshold(make({-2.0, 1.0, 3.0}), inp::InpConfig{0.0}) == 2.0);
}

TEST_CASE("clip: inverse-square attenuation") {
    CHECK(inp::clip(make({0.5}), 1.0).samples[0] == 0.5);
    CHECK(inp::clip(make({4.0}), 2.0).samples[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(inp::clip(make({-4.0}), 2.0).samples[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK_THROWS_AS(inp::clip(make({1.0}), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(inp::clip(make({1.0}), -1.0), std::invalid_argument);
}

TEST_CASE("clip: idempotent, odd, contractive") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Signal y = random_signal(seed, 64 + seed % 128);
        const double tau = inp::threshold(y);
        REQUIRE(tau > 0.0);
        const Signal once = inp::clip(y, tau);
        const Signal twice = inp::clip(once, tau);
        Signal neg = y;
        for (double& v : neg.samples) v = -v;
        const Signal clipped_neg = inp::clip(neg, tau);
        for (std::size_t i = 0; i < y.samples.size(); ++i) {
            CHECK(twice.samples[i] == once.samples[i]);
            CHECK(clipped_neg.samples[i] == -once.samples[i]);
            CHECK(std::abs(once.samples[i]) <= tau);
            CHECK(std::abs(once.samples[i]) <= std::abs(y.samples[i]));
        }
    }
}

TEST_CASE("normalize: peak scaling") {
    const Signal a = inp::normalize(make({0.5, -1.0}));
    CHECK(a.samples[0] == 0.5);
    CHECK(a.samples[1] == -1.0);

    const Signal b = inp::normalize(make({2.0, -4.0}));
    CHECK(b.samples[0] == 0.5);
    CHECK(b.samples[1] == -1.0);

    CHECK(inp::normalize(make({-0.3})).samples[0] == -1.0);
    CHECK_THROWS_AS(inp::normalize(make({0.0, 0.0})), std::invalid_argument);

    // idempotent
    const Signal c = inp::normalize(make({0.1, 0.7, -0.2}));
    const Signal d = inp::normalize(c);
    CHECK(c.samples == d.samples);
}

TEST_CASE("preprocess: below-threshold signals pass through") {
    // Unit sinusoid sampled on the bin grid hits its peak of exactly 1;
    // median |sin| ~ 0.707 puts tau_r ~ 2.83, so clipping never engages.
    Signal s;
    s.samples.resize(800);
    for (std::size_t n = 0; n < s.samples.size(); ++n) {
        s.samples[n] = std::sin(2.0 * std::numbers::pi * 1000.0 * n / 8000.0);
    }
    CHECK(inp::threshold(s) > 1.0);
    const Signal out = inp::preprocess(s);
    CHECK(out.samples == s.samples);

    const Signal alt = make({1.0, -1.0, 1.0, -1.0});
    CHECK(inp::preprocess(alt).samples == alt.samples);
}

TEST_CASE("preprocess: impulses are pushed below the threshold") {
    auto rng = make_rng(77);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Signal y;
    y.samples.resize(512);
    for (double& v : y.samples) v = u(rng);
    for (std::size_t i = 16; i < y.samples.size(); i += 64) {
        y.samples[i] = i % 128 == 16 ? 100.0 : -100.0;
    }
    const double tau = inp::threshold(y);
    const Signal clipped = inp::clip(y, tau);
    for (std::size_t i = 0; i < y.samples.size(); ++i) {
        CHECK(std::abs(clipped.samples[i]) <= tau);
        if (std::abs(y.samples[i]) == 100.0) {
            CHECK(std::abs(clipped.samples[i]) < tau);  // strictly attenuated
        }
    }
    const Signal out = inp::preprocess(y);
    double peak = 0.0;
    for (double v : out.samples) peak = std::max(peak, std::abs(v));
    CHECK(peak == 1.0);
}

TEST_CASE("preprocess: output peak is exactly 1") {
    for (std::uint64_t seed = 300; seed < 320; ++seed) {
        const Signal out = inp::preprocess(random_signal(seed, 256));
        double peak = 0.0;
        for (double v : out.samples) peak = std::max(peak, std::abs(v));
        CHECK(peak == 1.0);
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(inp::threshold(make({1.0}), inp::InpConfig{-0.5}), std::invalid_argument);
}
