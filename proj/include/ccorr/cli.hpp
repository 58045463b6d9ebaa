#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccorr/models.hpp"

namespace ccorr::cli {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class ExitCode : int { Ok = 0, Internal = 1, Usage = 2, Data = 3, Numeric = 4 };

enum class SignalFormat { Csv, F64 };

std::optional<SignalFormat> parse_signal_format(std::string_view name) noexcept;

/// One value per line (csv) or raw little-endian binary64 (f64). Throws
/// ParseError naming the offending line or sample index; non-finite values
/// are rejected.
SignalWindow ingest_signal(const std::filesystem::path& path, SignalFormat format);

void write_signal(const std::filesystem::path& path, const SignalWindow& signal, SignalFormat format);

/// "a..b" (inclusive, either order ascending) or a comma list "0,1,5".
std::vector<std::int64_t> parse_lags(std::string_view text);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// In-memory CSV table with a header row.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    CsvTable& cell(std::string_view text);
    CsvTable& cell(double v);
    CsvTable& cell(std::int64_t v);
    CsvTable& cell(std::size_t v);
    CsvTable& empty();
    void end_row();

    std::size_t rows() const noexcept { return rows_; }
    const std::string& text() const noexcept { return text_; }

private:
    std::size_t columns_;
    std::size_t in_row_ = 0;
    std::size_t rows_ = 0;
    std::string text_;
};

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

struct OutputFile {
    std::string name;
    std::string sha256;
    std::size_t bytes = 0;
};

/// Collects the files written by one command and emits manifest.json.
class RunRecorder {
public:
    RunRecorder(std::filesystem::path out_dir, std::string command, std::vector<std::string> args,
                std::uint64_t seed);

    void write(const std::string& name, const std::string& contents);
    void finish();

    const std::vector<OutputFile>& outputs() const noexcept { return outputs_; }

private:
    std::filesystem::path dir_;
    std::string command_;
    std::vector<std::string> args_;
    std::uint64_t seed_;
    std::string started_;
    std::vector<OutputFile> outputs_;
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Diagnostics go to `err`, progress lines to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccorr::cli
