#include "sigenh/signal.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sigenh {

void require_valid(const Signal& s, const char* op) {
    if (s.samples.empty()) {
        throw std::invalid_argument(std::string(op) + ": signal is empty");
    }
    if (s.sample_rate == 0) {
        throw std::invalid_argument(std::string(op) + ": sample_rate must be > 0");
    }
    for (std::size_t i = 0; i < s.samples.size(); ++i) {
        if (!std::isfinite(s.samples[i])) {
            throw std::invalid_argument(std::string(op) + ": non-finite sample at index " +
                                        std::to_string(i));
        }
    }
}

double mean(const Signal& s) {
    require_valid(s, "mean");
    double acc = 0.0;
    for (double v : s.samples) acc += v;
    return acc / static_cast<double>(s.samples.size());
}

double power(const Signal& s) {
    require_valid(s, "power");
    double acc = 0.0;
    for (double v : s.samples) acc += v * v;
    return acc / static_cast<double>(s.samples.size());
}

Signal scaled(Signal s, double factor) {
    for (double& v : s.samples) v *= factor;
    return s;
}

Signal demeaned(Signal s) {
    const double m = mean(s);
    for (double& v : s.samples) v -= m;
    return s;
}

namespace {

constexpr char kMagic[4] = {'S', 'G', 'N', 'L'};

void put_u32_le(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64_le(std::ostream& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32_le(const unsigned char* b) {
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

double get_f64_le(const unsigned char* b) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &bits, sizeof v);
    return v;
}

bool has_suffix(const std::string& path, const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

void write_sgnl(const Signal& s, const std::string& path) {
    require_valid(s, "write_sgnl");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out.write(kMagic, 4);
    put_u32_le(out, s.sample_rate);
    for (double v : s.samples) put_f64_le(out, v);
    out.flush();
    if (!out) throw std::runtime_error(path + ": write failed");
}

Signal read_sgnl(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");

    unsigned char header[8];
    in.read(reinterpret_cast<char*>(header), 8);
    if (in.gcount() != 8) {
        throw std::runtime_error(path + ": truncated header at byte " +
                                 std::to_string(in.gcount()));
    }
    if (std::memcmp(header, kMagic, 4) != 0) {
        throw std::runtime_error(path + ": bad magic at byte 0 (expected \"SGNL\")");
    }
    Signal s;
    s.sample_rate = get_u32_le(header + 4);
    if (s.sample_rate == 0) {
        throw std::runtime_error(path + ": zero sample_rate at byte 4");
    }

    unsigned char buf[8];
    std::size_t offset = 8;
    while (true) {
        in.read(reinterpret_cast<char*>(buf), 8);
        const std::streamsize got = in.gcount();
        if (got == 0) break;
        if (got != 8) {
            throw std::runtime_error(path + ": truncated sample at byte " +
                                     std::to_string(offset + static_cast<std::size_t>(got)));
        }
        const double v = get_f64_le(buf);
        if (!std::isfinite(v)) {
            throw std::runtime_error(path + ": non-finite sample at byte " +
                                     std::to_string(offset));
        }
        s.samples.push_back(v);
        offset += 8;
    }
    if (s.samples.empty()) {
        throw std::runtime_error(path + ": no samples after header");
    }
    return s;
}

void write_signal_csv(const Signal& s, const std::string& path) {
    require_valid(s, "write_signal_csv");
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out.precision(17);
    for (double v : s.samples) out << v << '\n';
    out.flush();
    if (!out) throw std::runtime_error(path + ": write failed");
}

Signal read_signal_csv(const std::string& path, std::uint32_t sample_rate) {
    if (sample_rate == 0) throw std::invalid_argument("read_signal_csv: sample_rate must be > 0");
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    Signal s;
    s.sample_rate = sample_rate;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream parse(line);
        double v;
        if (!(parse >> v) || !std::isfinite(v)) {
            throw std::runtime_error(path + ": bad sample on line " + std::to_string(lineno));
        }
        s.samples.push_back(v);
    }
    if (s.samples.empty()) throw std::runtime_error(path + ": no samples");
    return s;
}

void write_signal(const Signal& s, const std::string& path) {
    if (has_suffix(path, ".csv")) {
        write_signal_csv(s, path);
    } else {
        write_sgnl(s, path);
    }
}

Signal read_signal(const std::string& path, std::uint32_t csv_rate) {
    if (has_suffix(path, ".csv")) {
        return read_signal_csv(path, csv_rate);
    }
    return read_sgnl(path);
}

}  // namespace sigenh
