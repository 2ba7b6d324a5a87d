#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigenh/bsr.hpp"
#include "sigenh/cumulant.hpp"
#include "sigenh/inp.hpp"
#include "sigenh/nlm.hpp"
#include "sigenh/signal.hpp"

namespace sigenh::pipeline {

/// Stage chain: INP -> (optional BSR) -> NLM -> cumulant FIR. Each stage
/// consumes the previous stage's output; at least one must be enabled.
/// BSR is off by default in the headline chain.
struct PipelineConfig {
    bool enable_inp = true;
    bool enable_bsr = false;
    bool enable_nlm = true;
    bool enable_fir = true;
    inp::InpConfig inp{};
    nlm::NlmConfig nlm{};
    int fir_lag = 64;
    std::optional<bsr::BsrSystem> bsr;
};

void validate(const PipelineConfig& cfg);

/// Key=value rendering of every resolved setting, used as the config
/// snapshot column of reports.
std::string config_string(const PipelineConfig& cfg);

/// Intermediate results captured by enhance() on request.
struct StageTrace {
    std::vector<std::pair<std::string, Signal>> stages;
    std::optional<cumulant::CumulantFilter> fir_filter;
};

/// Deterministic sequential application of the enabled stages. Stage
/// failures abort with a stage-identifying diagnostic.
Signal enhance(const Signal& y, const PipelineConfig& cfg, StageTrace* trace = nullptr);

/// Element-wise mean of equal-length, equal-rate signals. Averaging N
/// independent-noise acquisitions raises SNR by 10*log10(N) dB.
Signal coherent_average(const std::vector<Signal>& signals);

/// One experiment row; the row type behind every experiment CSV.
struct EvalReport {
    std::string scenario;
    std::string param;          // grid point, e.g. "count=1000" or "snr=-5"
    std::uint64_t seed = 0;
    double snr_in_db = 0.0;
    double snr_out_db = 0.0;
    std::optional<double> ber;  // empty when the scenario carries no bits
    double gain_alpha = 0.0;
    double wall_time_s = 0.0;   // enhancement only, excludes generation and I/O
    std::string config;
};

/// Fixed, versioned column order of report CSVs.
extern const char* const kReportColumns;

std::string to_csv_row(const EvalReport& r);
void write_reports_csv(const std::string& path, const std::vector<EvalReport>& rows,
                       bool append = false);

std::vector<std::string> known_scenarios();

/// Runs a registered scenario once per seed (rows ordered by seed, then by
/// grid point). Unknown names are rejected with the list of known scenarios.
/// Scenarios run concurrently across seeds except "timing", which stays
/// sequential so wall-clock rows do not contend.
std::vector<EvalReport> run_experiment(const std::string& scenario,
                                       const std::vector<std::uint64_t>& seeds);

struct BenchRow {
    std::size_t count = 0;
    double wall_time_s = 0.0;
};

/// Wall time of enhancing `count` noisy signals of `signal_len` samples for
/// each entry of `counts`, timing the enhance calls only.
std::vector<BenchRow> bench_timing(const std::vector<std::size_t>& counts,
                                   std::size_t signal_len, const PipelineConfig& cfg,
                                   std::uint64_t seed);

}  // namespace sigenh::pipeline
