#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigenh/modulation.hpp"
#include "sigenh/noise.hpp"
#include "sigenh/signal.hpp"

namespace sigenh::bsr {

/// Bistable double-well system dx/dt = a*x - b*x^3 + input(t), integrated
/// with forward Euler. Stable fixed points at +-sqrt(a/b); a weak
/// sub-threshold drive plus the right amount of noise synchronizes hopping
/// between the wells (stochastic resonance).
struct BsrSystem {
    double a = 1.0;    // linear potential coefficient (1/s)
    double b = 1.0;    // cubic potential coefficient
    double dt = 0.05;  // integration step (s); substepped to fit the sample grid
    double x0 = 1.0;   // initial state
};

void validate(const BsrSystem& sys);

/// Forward-Euler trajectory sampled on the input grid. Each sample interval
/// is split into ceil(interval/dt) equal substeps with the input held
/// constant. Trajectories leaving |x| > 10*sqrt(a/b) abort with a diagnostic
/// (integration step too large).
Signal integrate(const BsrSystem& sys, const Signal& input);

/// One dataset entry: the original waveform, its trace through the bistable
/// system, and whether the system amplified the drive.
struct LabeledPair {
    Signal pre;
    Signal post;
    bool resonant = false;
    double carrier_hz = 0.0;
};

struct DatasetParams {
    std::uint32_t sample_rate = 4;  // Hz; slow grid suits the 1/s well rates
    double duration_s = 2048.0;
    double amplitude = 0.25;        // drive scale; sub-threshold for a = b = 1
};

/// count pairs, cycling through `mods`. post = integrate(sys, pre + noise)
/// with a per-pair child seed of `seed`; resonant iff the mean-removed DFT
/// power at the pre-signal's carrier bin grew through the system.
std::vector<LabeledPair> build_dataset(const std::vector<ModulationSpec>& mods,
                                       const BsrSystem& sys, const NoiseSpec& noise,
                                       std::size_t count, std::uint64_t seed,
                                       const DatasetParams& params = {});

/// Writes pairs.csv (id, resonant, carrier_hz) plus pre_NNNN.sgnl /
/// post_NNNN.sgnl per pair into `dir` (created if missing).
void export_dataset(const std::vector<LabeledPair>& pairs, const std::string& dir);

}  // namespace sigenh::bsr
