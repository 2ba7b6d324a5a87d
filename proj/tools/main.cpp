// sigenh: command-line front end for the signal enhancement toolkit.
//
// Subcommands: generate, enhance, detect, eval, bench, dataset.
// Exit codes: 0 success, 1 runtime/I-O failure, 2 usage error.
// Every subcommand writes a JSON run manifest (no timestamps, so reruns with
// identical flags produce byte-identical manifests and outputs).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigenh/bsr.hpp"
#include "sigenh/detect.hpp"
#include "sigenh/metrics.hpp"
#include "sigenh/noise.hpp"
#include "sigenh/pipeline.hpp"
#include "sigenh/rng.hpp"
#include "sigenh/version.hpp"

namespace {

using nlohmann::json;
using namespace sigenh;

std::vector<std::string> capture_argv(int argc, char** argv) {
    return {argv, argv + argc};
}

void write_manifest(const std::string& path, const std::string& subcommand,
                    const std::vector<std::string>& argv, const json& options,
                    const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs) {
    json manifest;
    manifest["tool"] = "sigenh";
    manifest["version"] = kVersion;
    manifest["subcommand"] = subcommand;
    manifest["argv"] = argv;
    manifest["options"] = options;
    manifest["inputs"] = inputs;
    manifest["outputs"] = outputs;
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error(path + ": cannot write manifest");
    out << manifest.dump(2) << '\n';
    if (!out) throw std::runtime_error(path + ": manifest write failed");
}

Bits parse_payload(const std::string& text) {
    Bits bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c == '0') {
            bits.push_back(0);
        } else if (c == '1') {
            bits.push_back(1);
        } else {
            throw std::invalid_argument("payload must be a string of 0s and 1s");
        }
    }
    return bits;
}

// ---- generate --------------------------------------------------------------

struct GenerateOpts {
    std::string scheme = "sine";
    double carrier = 1000.0;
    std::uint32_t rate = kDefaultSampleRate;
    double duration = 0.0;
    double symbol_rate = 0.0;
    std::string payload;
    std::size_t payload_bits = 0;
    std::uint64_t seed = 0;
    double gaussian_sigma = 0.0;
    double impulse_prob = 0.0;
    double impulse_sigma = 0.0;
    std::optional<double> snr_db;
    double impulse_ratio = 0.0;
    std::string out;
    std::string clean_out;
    std::string manifest;
};

void cmd_generate(const GenerateOpts& opt, const std::vector<std::string>& argv) {
    ModulationSpec mod;
    mod.scheme = scheme_from_string(opt.scheme);
    mod.carrier_hz = opt.carrier;
    mod.symbol_rate = opt.symbol_rate;
    if (!opt.payload.empty()) {
        mod.payload_bits = parse_payload(opt.payload);
    } else if (opt.payload_bits > 0) {
        mod.payload_bits = random_bits(opt.payload_bits, derive_seed(opt.seed, 1));
    }

    const Signal clean = generate(mod, opt.rate, opt.duration);

    NoiseSpec noise;
    if (opt.snr_db.has_value()) {
        noise = noise_for_snr(clean, *opt.snr_db, opt.impulse_prob, opt.impulse_ratio,
                              derive_seed(opt.seed, 2));
    } else {
        noise.gaussian_sigma = opt.gaussian_sigma;
        noise.impulse_prob = opt.impulse_prob;
        noise.impulse_sigma = opt.impulse_sigma;
        noise.rng_seed = derive_seed(opt.seed, 2);
    }
    const Signal out_signal = add_noise(clean, noise);

    write_signal(out_signal, opt.out);
    std::vector<std::string> outputs{opt.out};
    if (!opt.clean_out.empty()) {
        write_signal(clean, opt.clean_out);
        outputs.push_back(opt.clean_out);
    }

    json options{{"scheme", opt.scheme},
                 {"carrier", opt.carrier},
                 {"rate", opt.rate},
                 {"dur", opt.duration},
                 {"symbol_rate", opt.symbol_rate},
                 {"payload", opt.payload},
                 {"payload_bits", opt.payload_bits},
                 {"seed", opt.seed},
                 {"gaussian_sigma", noise.gaussian_sigma},
                 {"impulse_prob", noise.impulse_prob},
                 {"impulse_sigma", noise.impulse_sigma},
                 {"samples", out_signal.samples.size()}};
    const std::string manifest = opt.manifest.empty() ? opt.out + ".manifest.json" : opt.manifest;
    write_manifest(manifest, "generate", argv, options, {}, outputs);
}

// ---- enhance ---------------------------------------------------------------

struct EnhanceOpts {
    std::string in;
    std::string out;
    std::string ref;
    std::string report;
    std::string export_taps;
    std::uint32_t csv_rate = kDefaultSampleRate;
    bool no_inp = false, no_nlm = false, no_fir = false, use_bsr = false;
    double inp_tau0 = 1.5;
    int nlm_patch = 2;
    int nlm_search = 32;
    double nlm_h = 0.0;
    double nlm_kernel_sigma = 0.0;
    int fir_lag = 64;
    double bsr_a = 1.0, bsr_b = 1.0, bsr_dt = 0.05, bsr_x0 = 1.0;
    std::size_t max_lag = 0;  // 0 = auto (2 * fir_lag + 64)
    std::string manifest;
};

pipeline::PipelineConfig enhance_config(const EnhanceOpts& opt) {
    pipeline::PipelineConfig cfg;
    cfg.enable_inp = !opt.no_inp;
    cfg.enable_nlm = !opt.no_nlm;
    cfg.enable_fir = !opt.no_fir;
    cfg.enable_bsr = opt.use_bsr;
    cfg.inp.tau0 = opt.inp_tau0;
    cfg.nlm.patch_half_width = opt.nlm_patch;
    if (opt.nlm_search < 0) {
        cfg.nlm.full_signal_search = true;
    } else {
        cfg.nlm.search_half_width = opt.nlm_search;
    }
    cfg.nlm.h = opt.nlm_h;
    cfg.nlm.kernel_sigma = opt.nlm_kernel_sigma;
    cfg.fir_lag = opt.fir_lag;
    if (opt.use_bsr) {
        cfg.bsr = bsr::BsrSystem{opt.bsr_a, opt.bsr_b, opt.bsr_dt, opt.bsr_x0};
    }
    return cfg;
}

void cmd_enhance(const EnhanceOpts& opt, const std::vector<std::string>& argv) {
    const pipeline::PipelineConfig cfg = enhance_config(opt);
    pipeline::validate(cfg);  // rejects the all-stages-disabled case up front

    const Signal input = read_signal(opt.in, opt.csv_rate);

    pipeline::StageTrace trace;
    const auto start = std::chrono::steady_clock::now();
    const Signal enhanced = pipeline::enhance(input, cfg, &trace);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    write_signal(enhanced, opt.out);
    std::vector<std::string> outputs{opt.out};

    if (!opt.export_taps.empty()) {
        if (!trace.fir_filter.has_value()) {
            throw std::invalid_argument("--export-taps requires the FIR stage to be enabled");
        }
        std::ofstream taps(opt.export_taps, std::ios::trunc);
        if (!taps) throw std::runtime_error(opt.export_taps + ": cannot open for writing");
        taps.precision(17);
        taps << "m,tap\n";
        for (std::size_t m = 0; m < trace.fir_filter->taps.size(); ++m) {
            taps << m << ',' << trace.fir_filter->taps[m] << '\n';
        }
        outputs.push_back(opt.export_taps);
    }

    if (!opt.ref.empty()) {
        const Signal ref = read_signal(opt.ref, opt.csv_rate);
        const std::size_t max_lag =
            opt.max_lag > 0 ? opt.max_lag : 2 * static_cast<std::size_t>(opt.fir_lag) + 64;

        pipeline::EvalReport row;
        row.scenario = "cli-enhance";
        row.param = "in=" + opt.in;
        row.seed = 0;
        row.config = pipeline::config_string(cfg);
        row.snr_in_db = snr_db(ref, input);
        const AlignedFit fit =
            align_to_reference(ref, enhanced, std::min(max_lag, ref.samples.size() - 1));
        row.snr_out_db = fit.snr_db;
        row.gain_alpha = fit.gain_alpha;
        row.wall_time_s = wall;

        const std::string report =
            opt.report.empty() ? opt.out + ".report.csv" : opt.report;
        pipeline::write_reports_csv(report, {row}, /*append=*/true);
        outputs.push_back(report);
        std::cout << pipeline::kReportColumns << '\n' << pipeline::to_csv_row(row) << '\n';
    }

    json options{{"in", opt.in},
                 {"out", opt.out},
                 {"ref", opt.ref},
                 {"config", pipeline::config_string(cfg)},
                 {"csv_rate", opt.csv_rate},
                 {"csv_columns", pipeline::kReportColumns}};
    const std::string manifest = opt.manifest.empty() ? opt.out + ".manifest.json" : opt.manifest;
    write_manifest(manifest, "enhance", argv, options, {opt.in}, outputs);
}

// ---- detect ----------------------------------------------------------------

struct DetectOpts {
    std::vector<std::string> inputs;
    double floor_power = 1e-3;
    std::uint32_t csv_rate = kDefaultSampleRate;
    std::string manifest = "detect.manifest.json";
};

void cmd_detect(const DetectOpts& opt, const std::vector<std::string>& argv) {
    const auto scorer = detect::energy_scorer(opt.floor_power);
    // score files concurrently, print in input order
    std::vector<std::future<detect::DetectorOutput>> futures;
    futures.reserve(opt.inputs.size());
    for (const std::string& path : opt.inputs) {
        futures.push_back(std::async(std::launch::async, [&, path] {
            return detect::run(read_signal(path, opt.csv_rate), scorer);
        }));
    }
    std::cout.precision(6);
    for (std::size_t i = 0; i < opt.inputs.size(); ++i) {
        const detect::DetectorOutput result = futures[i].get();
        std::cout << opt.inputs[i] << '\t' << std::fixed << result.p_signal << '\n';
        std::cout.unsetf(std::ios::fixed);
    }
    json options{{"floor", opt.floor_power}, {"csv_rate", opt.csv_rate}};
    write_manifest(opt.manifest, "detect", argv, options, opt.inputs, {});
}

// ---- eval ------------------------------------------------------------------

struct EvalOpts {
    std::string scenario;
    std::vector<std::uint64_t> seeds;
    std::size_t seed_count = 0;
    std::uint64_t seed_base = 1;
    std::string out;
    std::string manifest;
};

void cmd_eval(const EvalOpts& opt, const std::vector<std::string>& argv) {
    std::vector<std::uint64_t> seeds = opt.seeds;
    if (seeds.empty()) {
        const std::size_t count = opt.seed_count > 0 ? opt.seed_count : 1;
        for (std::size_t i = 0; i < count; ++i) seeds.push_back(opt.seed_base + i);
    }
    const auto rows = pipeline::run_experiment(opt.scenario, seeds);
    pipeline::write_reports_csv(opt.out, rows);

    json options{{"scenario", opt.scenario},
                 {"seeds", seeds},
                 {"csv_columns", pipeline::kReportColumns}};
    const std::string manifest = opt.manifest.empty() ? opt.out + ".manifest.json" : opt.manifest;
    write_manifest(manifest, "eval", argv, options, {}, {opt.out});
    std::cout << "wrote " << rows.size() << " rows to " << opt.out << '\n';
}

// ---- bench -----------------------------------------------------------------

struct BenchOpts {
    std::vector<std::size_t> counts;
    std::size_t length = 1024;
    std::uint64_t seed = 1;
    std::string out;
    std::string manifest;
};

void cmd_bench(const BenchOpts& opt, const std::vector<std::string>& argv) {
    std::vector<std::size_t> counts = opt.counts;
    if (counts.empty()) {
        for (std::size_t c = 1000; c <= 5000; c += 500) counts.push_back(c);
    }
    const pipeline::PipelineConfig cfg{};
    const auto rows = pipeline::bench_timing(counts, opt.length, cfg, opt.seed);

    std::ofstream out(opt.out, std::ios::trunc);
    if (!out) throw std::runtime_error(opt.out + ": cannot open for writing");
    out.precision(9);
    out << "count,wall_time_s\n";
    for (const auto& row : rows) out << row.count << ',' << row.wall_time_s << '\n';
    out.flush();
    if (!out) throw std::runtime_error(opt.out + ": write failed");

    json options{{"counts", counts},
                 {"length", opt.length},
                 {"seed", opt.seed},
                 {"config", pipeline::config_string(cfg)},
                 {"csv_columns", "count,wall_time_s"}};
    const std::string manifest = opt.manifest.empty() ? opt.out + ".manifest.json" : opt.manifest;
    write_manifest(manifest, "bench", argv, options, {}, {opt.out});
    std::cout << "wrote " << rows.size() << " rows to " << opt.out << '\n';
}

// ---- dataset ---------------------------------------------------------------

struct DatasetOpts {
    std::size_t count = 100;
    std::string out_dir;
    std::uint64_t seed = 1;
    double sigma = 0.9;
    double impulse_prob = 0.0;
    double impulse_sigma = 0.0;
    std::uint32_t rate = 4;
    double duration = 2048.0;
    double amplitude = 0.25;
    std::vector<double> carriers;
    double bsr_a = 1.0, bsr_b = 1.0, bsr_dt = 0.05, bsr_x0 = 1.0;
    std::string manifest;
};

void cmd_dataset(const DatasetOpts& opt, const std::vector<std::string>& argv) {
    std::vector<double> carriers = opt.carriers;
    if (carriers.empty()) carriers.push_back(1.0 / 128.0);

    std::vector<ModulationSpec> mods;
    for (double carrier : carriers) {
        ModulationSpec mod;
        mod.scheme = Scheme::kSine;
        mod.carrier_hz = carrier;
        mods.push_back(mod);
    }

    const bsr::BsrSystem sys{opt.bsr_a, opt.bsr_b, opt.bsr_dt, opt.bsr_x0};
    NoiseSpec noise;
    noise.gaussian_sigma = opt.sigma;
    noise.impulse_prob = opt.impulse_prob;
    noise.impulse_sigma = opt.impulse_sigma;

    bsr::DatasetParams params;
    params.sample_rate = opt.rate;
    params.duration_s = opt.duration;
    params.amplitude = opt.amplitude;

    const auto pairs = bsr::build_dataset(mods, sys, noise, opt.count, opt.seed, params);
    bsr::export_dataset(pairs, opt.out_dir);

    std::size_t resonant = 0;
    for (const auto& pair : pairs) resonant += pair.resonant ? 1 : 0;

    json options{{"count", opt.count},     {"seed", opt.seed},
                 {"sigma", opt.sigma},     {"impulse_prob", opt.impulse_prob},
                 {"impulse_sigma", opt.impulse_sigma},
                 {"rate", opt.rate},       {"dur", opt.duration},
                 {"amplitude", opt.amplitude}, {"carriers", carriers},
                 {"bsr_a", opt.bsr_a},     {"bsr_b", opt.bsr_b},
                 {"bsr_dt", opt.bsr_dt},   {"bsr_x0", opt.bsr_x0},
                 {"resonant", resonant}};
    const std::string manifest =
        opt.manifest.empty() ? opt.out_dir + "/manifest.json" : opt.manifest;
    write_manifest(manifest, "dataset", argv, options, {}, {opt.out_dir});
    std::cout << "wrote " << pairs.size() << " pairs (" << resonant << " resonant) to "
              << opt.out_dir << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> raw_argv = capture_argv(argc, argv);

    CLI::App app{"sigenh: low-power communication signal enhancement toolkit"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    // key=value file with one [subcommand] section per command; explicit
    // flags always win over file values, which win over built-in defaults
    app.set_config("--config", "", "Read options from a config file");

    std::function<void()> action;

    // generate
    GenerateOpts gen;
    auto* cgen = app.add_subcommand("generate", "Synthesize a (optionally noisy) waveform");
    cgen->add_option("--scheme", gen.scheme, "Modulation: sine|bpsk|bfsk")
        ->check(CLI::IsMember({"sine", "bpsk", "bfsk"}))
        ->capture_default_str();
    cgen->add_option("--carrier", gen.carrier, "Carrier frequency (Hz)")->capture_default_str();
    cgen->add_option("--rate", gen.rate, "Sample rate (Hz)")->capture_default_str();
    cgen->add_option("--dur", gen.duration, "Duration (s)")->required();
    cgen->add_option("--symbol-rate", gen.symbol_rate, "Symbols per second (digital schemes)");
    cgen->add_option("--payload", gen.payload, "Explicit payload bits, e.g. 0110");
    cgen->add_option("--payload-bits", gen.payload_bits, "Generate this many random payload bits");
    cgen->add_option("--seed", gen.seed, "Master seed for payload and noise")->capture_default_str();
    cgen->add_option("--gaussian-sigma", gen.gaussian_sigma, "Gaussian noise std");
    cgen->add_option("--impulse-prob", gen.impulse_prob, "Per-sample impulse probability");
    cgen->add_option("--impulse-sigma", gen.impulse_sigma, "Impulse noise std");
    cgen->add_option("--snr-db", gen.snr_db, "Choose noise power for this SNR instead of sigmas");
    cgen->add_option("--impulse-ratio", gen.impulse_ratio,
                     "impulse_sigma / gaussian_sigma when --snr-db is used");
    cgen->add_option("--out", gen.out, "Output signal file (.sgnl or .csv)")->required();
    cgen->add_option("--clean-out", gen.clean_out, "Also write the noise-free waveform here");
    cgen->add_option("--manifest", gen.manifest, "Manifest path (default <out>.manifest.json)");
    cgen->callback([&] { action = [&] { cmd_generate(gen, raw_argv); }; });

    // enhance
    EnhanceOpts enh;
    auto* cenh = app.add_subcommand("enhance", "Run the enhancement chain over a signal file");
    cenh->add_option("--in", enh.in, "Input signal file")->required();
    cenh->add_option("--out", enh.out, "Output signal file")->required();
    cenh->add_option("--ref", enh.ref, "Clean reference; appends an EvalReport row");
    cenh->add_option("--report", enh.report, "Report CSV path (default <out>.report.csv)");
    cenh->add_option("--export-taps", enh.export_taps, "Write FIR taps as CSV");
    cenh->add_option("--csv-rate", enh.csv_rate, "Sample rate assumed for .csv inputs")
        ->capture_default_str();
    cenh->add_flag("--no-inp", enh.no_inp, "Disable the impulse-noise preprocessor");
    cenh->add_flag("--no-nlm", enh.no_nlm, "Disable non-local means");
    cenh->add_flag("--no-fir", enh.no_fir, "Disable the cumulant FIR stage");
    cenh->add_flag("--bsr", enh.use_bsr, "Insert the bistable stochastic-resonance stage");
    cenh->add_option("--inp-tau0", enh.inp_tau0, "INP threshold coefficient")->capture_default_str();
    cenh->add_option("--nlm-patch", enh.nlm_patch, "NLM patch half-width P")->capture_default_str();
    cenh->add_option("--nlm-search", enh.nlm_search,
                     "NLM search half-width S (negative = whole signal)")
        ->capture_default_str();
    cenh->add_option("--nlm-h", enh.nlm_h, "NLM smoothing h (0 = auto)")->capture_default_str();
    cenh->add_option("--nlm-kernel-sigma", enh.nlm_kernel_sigma,
                     "NLM patch kernel sigma (0 = uniform)")
        ->capture_default_str();
    cenh->add_option("--fir-lag", enh.fir_lag, "Cumulant filter lag count L")->capture_default_str();
    cenh->add_option("--bsr-a", enh.bsr_a, "BSR linear coefficient")->capture_default_str();
    cenh->add_option("--bsr-b", enh.bsr_b, "BSR cubic coefficient")->capture_default_str();
    cenh->add_option("--bsr-dt", enh.bsr_dt, "BSR integration step (s)")->capture_default_str();
    cenh->add_option("--bsr-x0", enh.bsr_x0, "BSR initial state")->capture_default_str();
    cenh->add_option("--max-lag", enh.max_lag, "Alignment delay search bound (0 = auto)");
    cenh->add_option("--manifest", enh.manifest, "Manifest path (default <out>.manifest.json)");
    cenh->callback([&] { action = [&] { cmd_enhance(enh, raw_argv); }; });

    // detect
    DetectOpts det;
    auto* cdet = app.add_subcommand("detect", "Print p_signal per input file");
    cdet->add_option("--in", det.inputs, "Input signal files")->required()->expected(-1);
    cdet->add_option("--floor", det.floor_power, "Noise floor power for the energy scorer")
        ->capture_default_str();
    cdet->add_option("--csv-rate", det.csv_rate, "Sample rate assumed for .csv inputs")
        ->capture_default_str();
    cdet->add_option("--manifest", det.manifest, "Manifest path")->capture_default_str();
    cdet->callback([&] { action = [&] { cmd_detect(det, raw_argv); }; });

    // eval
    EvalOpts ev;
    auto* ceval = app.add_subcommand("eval", "Run a named experiment scenario");
    ceval->add_option("--scenario", ev.scenario, "Scenario name (see --list via bad name)")
        ->required();
    ceval->add_option("--seeds", ev.seeds, "Explicit seed list")->delimiter(',');
    ceval->add_option("--seed-count", ev.seed_count, "Number of consecutive seeds");
    ceval->add_option("--seed-base", ev.seed_base, "First seed when using --seed-count")
        ->capture_default_str();
    ceval->add_option("--out", ev.out, "Report CSV path")->required();
    ceval->add_option("--manifest", ev.manifest, "Manifest path (default <out>.manifest.json)");
    ceval->callback([&] { action = [&] { cmd_eval(ev, raw_argv); }; });

    // bench
    BenchOpts bench;
    auto* cbench = app.add_subcommand("bench", "Wall-time of the chain over a batch-size grid");
    cbench->add_option("--counts", bench.counts, "Batch sizes (default 1000..5000 step 500)")
        ->delimiter(',');
    cbench->add_option("--length", bench.length, "Samples per signal")->capture_default_str();
    cbench->add_option("--seed", bench.seed, "Noise seed")->capture_default_str();
    cbench->add_option("--out", bench.out, "Output CSV path")->required();
    cbench->add_option("--manifest", bench.manifest, "Manifest path (default <out>.manifest.json)");
    cbench->callback([&] { action = [&] { cmd_bench(bench, raw_argv); }; });

    // dataset
    DatasetOpts ds;
    auto* cds = app.add_subcommand("dataset", "Build a labeled resonance dataset directory");
    cds->add_option("--count", ds.count, "Number of pairs")->capture_default_str();
    cds->add_option("--out-dir", ds.out_dir, "Output directory")->required();
    cds->add_option("--seed", ds.seed, "Master seed")->capture_default_str();
    cds->add_option("--sigma", ds.sigma, "Gaussian noise std")->capture_default_str();
    cds->add_option("--impulse-prob", ds.impulse_prob, "Per-sample impulse probability");
    cds->add_option("--impulse-sigma", ds.impulse_sigma, "Impulse noise std");
    cds->add_option("--rate", ds.rate, "Sample rate (Hz)")->capture_default_str();
    cds->add_option("--dur", ds.duration, "Duration per pair (s)")->capture_default_str();
    cds->add_option("--amplitude", ds.amplitude, "Drive amplitude")->capture_default_str();
    cds->add_option("--carriers", ds.carriers, "Carrier frequencies (Hz)")->delimiter(',');
    cds->add_option("--bsr-a", ds.bsr_a, "BSR linear coefficient")->capture_default_str();
    cds->add_option("--bsr-b", ds.bsr_b, "BSR cubic coefficient")->capture_default_str();
    cds->add_option("--bsr-dt", ds.bsr_dt, "BSR integration step (s)")->capture_default_str();
    cds->add_option("--bsr-x0", ds.bsr_x0, "BSR initial state")->capture_default_str();
    cds->add_option("--manifest", ds.manifest, "Manifest path (default <out-dir>/manifest.json)");
    cds->callback([&] { action = [&] { cmd_dataset(ds, raw_argv); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // help/version exit 0; every other parse problem is a usage error
        return code == 0 ? 0 : 2;
    }

    try {
        action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
