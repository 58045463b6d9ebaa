#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>

#include "ccorr/cli.hpp"
#include "ccorr/error.hpp"
#include "json.hpp"

namespace ccorr::cli {

namespace {

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::array<char, 32> buf{};
    std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf.data();
}

void write_bytes(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("cannot write " + path.string());
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 32> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : columns_(header.size()) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) text_ += ',';
        text_ += header[i];
    }
    text_ += '\n';
}

CsvTable& CsvTable::cell(std::string_view text) {
    if (in_row_ == columns_) throw DimensionError("CSV row has too many cells");
    if (in_row_++) text_ += ',';
    text_ += text;
    return *this;
}

CsvTable& CsvTable::cell(double v) { return cell(std::string_view(format_double(v))); }
CsvTable& CsvTable::cell(std::int64_t v) { return cell(std::string_view(std::to_string(v))); }
CsvTable& CsvTable::cell(std::size_t v) { return cell(std::string_view(std::to_string(v))); }
CsvTable& CsvTable::empty() { return cell(std::string_view()); }

void CsvTable::end_row() {
    if (in_row_ != columns_) throw DimensionError("CSV row has too few cells");
    text_ += '\n';
    in_row_ = 0;
    ++rows_;
}

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 digest failed");
    }
    std::string hex;
    hex.reserve(2 * len);
    static constexpr char kDigits[] = "0123456789abcdef";
    for (unsigned int i = 0; i < len; ++i) {
        hex += kDigits[md[i] >> 4];
        hex += kDigits[md[i] & 0xf];
    }
    return hex;
}

RunRecorder::RunRecorder(std::filesystem::path out_dir, std::string command,
                         std::vector<std::string> args, std::uint64_t seed)
    : dir_(std::move(out_dir)), command_(std::move(command)), args_(std::move(args)), seed_(seed),
      started_(utc_now()) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw Error("cannot create output directory " + dir_.string() + ": " + ec.message());
}

void RunRecorder::write(const std::string& name, const std::string& contents) {
    write_bytes(dir_ / name, contents);
    outputs_.push_back(OutputFile{name, sha256_hex(contents), contents.size()});
}

void RunRecorder::finish() {
    nlohmann::ordered_json files = nlohmann::ordered_json::array();
    for (const auto& f : outputs_) {
        files.push_back({{"file", f.name}, {"sha256", f.sha256}, {"bytes", f.bytes}});
    }
    const nlohmann::ordered_json manifest = {
        {"tool", "ccorr"},
        {"version", std::string(kToolVersion)},
        {"command", command_},
        {"args", args_},
        {"seed", seed_},
        {"started", started_},
        {"finished", utc_now()},
        {"outputs", files},
    };
    write_bytes(dir_ / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace ccorr::cli
