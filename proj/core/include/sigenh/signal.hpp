#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sigenh {

inline constexpr std::uint32_t kDefaultSampleRate = 8000;

/// Uniformly sampled real-valued waveform. Amplitudes are dimensionless
/// (typically peak-normalized somewhere along the chain); sample_rate is Hz.
/// This is the currency every processing stage consumes and produces.
struct Signal {
    std::vector<double> samples;
    std::uint32_t sample_rate = kDefaultSampleRate;
};

/// Throws std::invalid_argument unless s is non-empty, sample_rate > 0 and
/// every sample is finite. `op` names the operation for the error message.
void require_valid(const Signal& s, const char* op);

double mean(const Signal& s);

/// Mean of squared samples.
double power(const Signal& s);

Signal scaled(Signal s, double factor);
Signal demeaned(Signal s);

// --- serialization ---------------------------------------------------------
//
// .sgnl container: 8-byte header (u32 magic "SGNL", u32 sample_rate, both
// little-endian) followed by raw little-endian IEEE-754 f64 samples.
// CSV interop: one sample per line; the rate is not stored in the file.

void write_sgnl(const Signal& s, const std::string& path);
Signal read_sgnl(const std::string& path);

void write_signal_csv(const Signal& s, const std::string& path);
Signal read_signal_csv(const std::string& path, std::uint32_t sample_rate);

/// Dispatches on extension: ".csv" goes through the CSV codec (reads need
/// `csv_rate`), everything else through the .sgnl codec.
void write_signal(const Signal& s, const std::string& path);
Signal read_signal(const std::string& path, std::uint32_t csv_rate = kDefaultSampleRate);

}  // namespace sigenh
