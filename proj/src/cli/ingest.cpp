#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "ccorr/cli.hpp"
#include "ccorr/error.hpp"

namespace ccorr::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    s = trim(s);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw DomainError("bad lag list '" + std::string(whole) + "'");
    }
    return v;
}

std::uint64_t to_little_endian(std::uint64_t v) {
    if constexpr (std::endian::native == std::endian::big) return __builtin_bswap64(v);
    return v;
}

}  // namespace

std::optional<SignalFormat> parse_signal_format(std::string_view name) noexcept {
    if (name == "csv") return SignalFormat::Csv;
    if (name == "f64") return SignalFormat::F64;
    return std::nullopt;
}

SignalWindow ingest_signal(const std::filesystem::path& path, SignalFormat format) {
    const std::string bytes = read_file(path);
    std::vector<double> samples;
    if (format == SignalFormat::F64) {
        if (bytes.size() % 8 != 0) {
            throw ParseError(path.string() + ": size " + std::to_string(bytes.size()) +
                                 " is not a multiple of 8 bytes",
                             0);
        }
        samples.resize(bytes.size() / 8);
        for (std::size_t i = 0; i < samples.size(); ++i) {
            std::uint64_t word;
            std::memcpy(&word, bytes.data() + 8 * i, 8);
            samples[i] = std::bit_cast<double>(to_little_endian(word));
            if (!std::isfinite(samples[i])) {
                throw ParseError(path.string() + ": non-finite value at sample index " +
                                     std::to_string(i),
                                 0);
            }
        }
    } else {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos < bytes.size()) {
            auto nl = bytes.find('\n', pos);
            if (nl == std::string::npos) nl = bytes.size();
            const std::string_view line = trim(std::string_view(bytes).substr(pos, nl - pos));
            pos = nl + 1;
            ++line_no;
            if (line.empty()) continue;
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
            if (ec != std::errc{} || ptr != line.data() + line.size()) {
                throw ParseError(path.string() + ":" + std::to_string(line_no) + ": cannot parse '" +
                                     std::string(line) + "' as a number",
                                 line_no);
            }
            if (!std::isfinite(v)) {
                throw ParseError(path.string() + ":" + std::to_string(line_no) +
                                     ": non-finite value at sample index " +
                                     std::to_string(samples.size()),
                                 line_no);
            }
            samples.push_back(v);
        }
    }
    if (samples.empty()) throw EmptyInputError(path.string() + " contains no samples");
    return SignalWindow(std::move(samples));
}

void write_signal(const std::filesystem::path& path, const SignalWindow& signal, SignalFormat format) {
    std::string bytes;
    if (format == SignalFormat::F64) {
        bytes.resize(signal.size() * 8);
        for (std::size_t i = 0; i < signal.size(); ++i) {
            const std::uint64_t word = to_little_endian(std::bit_cast<std::uint64_t>(signal.samples()[i]));
            std::memcpy(bytes.data() + 8 * i, &word, 8);
        }
    } else {
        for (double v : signal.samples()) {
            bytes += format_double(v);
            bytes += '\n';
        }
    }
    std::ofstream out(path, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("cannot write " + path.string());
}

std::vector<std::int64_t> parse_lags(std::string_view text) {
    const std::string_view t = trim(text);
    if (t.empty()) throw DomainError("empty lag list");
    std::vector<std::int64_t> lags;
    if (const auto dots = t.find(".."); dots != std::string_view::npos) {
        const std::int64_t lo = parse_int(t.substr(0, dots), t);
        const std::int64_t hi = parse_int(t.substr(dots + 2), t);
        if (hi < lo) throw DomainError("lag range '" + std::string(t) + "' is descending");
        for (std::int64_t k = lo; k <= hi; ++k) lags.push_back(k);
        return lags;
    }
    std::size_t pos = 0;
    while (pos <= t.size()) {
        auto comma = t.find(',', pos);
        if (comma == std::string_view::npos) comma = t.size();
        lags.push_back(parse_int(t.substr(pos, comma - pos), t));
        pos = comma + 1;
    }
    return lags;
}

}  // namespace ccorr::cli
