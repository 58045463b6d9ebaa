#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ccorr/models.hpp"
#include "ccorr/projection.hpp"

namespace ccorr {

/// Every estimator the library evaluates.
///
///   Plain                 c_N   = N^-1 x'y
///   PlainShort            c_M   = plain estimate on the M most recent pairs
///   Compressed            C_N   = (Phi x)'(Phi y)
///   Subsampled            CC_M  = mean of x_i y_i over M indices drawn without replacement
///   Quantized*            same with one-bit (sign) data, M^-1 or N^-1 normalized
///   Quantized*Corrected   sin(pi/2 * raw) of the quantized value
enum class EstimatorKind {
    Plain,
    PlainShort,
    Compressed,
    Subsampled,
    QuantizedPlain,
    QuantizedCompressed,
    QuantizedSubsampled,
    QuantizedPlainCorrected,
    QuantizedCompressedCorrected,
    QuantizedSubsampledCorrected,
};

inline constexpr EstimatorKind kAllEstimatorKinds[] = {
    EstimatorKind::Plain,
    EstimatorKind::PlainShort,
    EstimatorKind::Compressed,
    EstimatorKind::Subsampled,
    EstimatorKind::QuantizedPlain,
    EstimatorKind::QuantizedCompressed,
    EstimatorKind::QuantizedSubsampled,
    EstimatorKind::QuantizedPlainCorrected,
    EstimatorKind::QuantizedCompressedCorrected,
    EstimatorKind::QuantizedSubsampledCorrected,
};

/// Names: plain, plain-m, compressed, subsampled, q-plain, q-compressed,
/// q-subsampled, q-plain-sin, q-compressed-sin, q-subsampled-sin.
std::string_view to_string(EstimatorKind kind) noexcept;
std::optional<EstimatorKind> parse_estimator_kind(std::string_view name) noexcept;

bool is_quantized(EstimatorKind kind) noexcept;
/// True for kinds that need M (everything except Plain and QuantizedPlain*).
bool uses_compression(EstimatorKind kind) noexcept;

/// Sign with sign(0) = +1.
inline double sign_of(double v) noexcept { return v >= 0.0 ? 1.0 : -1.0; }

double plain_corr(std::span<const double> x, std::span<const double> y);
double plain_corr(const LaggedPair& p);

/// (Phi x)'(Phi y). A without-replacement scheme is evaluated as
/// subsampled_corr over its selection.
double compressed_corr(const LaggedPair& p, const Projection& scheme);

/// M^-1 sum over the selected indices of x_i y_i. Indices are visited in
/// ascending order, so a full selection reproduces plain_corr bit for bit.
double subsampled_corr(std::span<const double> x, std::span<const double> y,
                       std::span<const std::uint32_t> indices);
double subsampled_corr(const LaggedPair& p, const SparseMap& indices);

double quantized_plain(std::span<const double> x, std::span<const double> y);
double quantized_plain(const LaggedPair& p);

/// M^-1 Sign(Phi x)' Sign(Phi y), in [-1, 1].
double quantized_compressed(const LaggedPair& p, const Projection& scheme);

double quantized_subsampled(std::span<const double> x, std::span<const double> y,
                            std::span<const std::uint32_t> indices);
double quantized_subsampled(const LaggedPair& p, const SparseMap& indices);

/// sin(pi * raw / 2). Throws DomainError when |raw| > 1.
double arcsin_correct(double raw);

/// Settings shared by a sweep over lags.
struct SeriesConfig {
    std::size_t n = 0;  ///< window length N
    std::size_t m = 0;  ///< compressed length M; required by uses_compression kinds
    ProjectionKind scheme = ProjectionKind::TernaryHalf;
    /// false: one scheme (and one subsample) reused for every lag.
    bool fresh_scheme_per_lag = false;
    /// Anchor time t of the x window. Default: the latest t for which every
    /// requested lag has a full window.
    std::optional<std::int64_t> anchor;
};

struct EstimateSeries {
    EstimatorKind kind = EstimatorKind::Plain;
    std::vector<std::int64_t> lags;
    std::vector<double> values;
    std::size_t n = 0;
    std::optional<std::size_t> m;
    std::optional<ProjectionKind> scheme;
};

/// Evaluate several estimator kinds over a lag sweep in one pass.
/// Result is indexed [kind][lag]. Deterministic given seed.
std::vector<std::vector<double>> evaluate_lags(const SignalWindow& x, const SignalWindow& y,
                                               std::span<const std::int64_t> lags,
                                               std::span<const EstimatorKind> kinds,
                                               const SeriesConfig& config, std::uint64_t seed);

EstimateSeries estimate_series(const SignalWindow& x, const SignalWindow& y,
                               std::span<const std::int64_t> lags, EstimatorKind kind,
                               const SeriesConfig& config, std::uint64_t seed);

}  // namespace ccorr
