#include "ccorr/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ccorr/error.hpp"
#include "ccorr/random.hpp"
#include "ccorr/summation.hpp"

namespace ccorr {

namespace {

void check_pair(std::span<const double> x, std::span<const double> y) {
    if (x.empty()) throw EmptyInputError("estimator input is empty");
    if (x.size() != y.size()) throw DimensionError("estimator inputs differ in length");
}

void check_indices(std::span<const std::uint32_t> indices, std::size_t n) {
    if (indices.empty()) throw EmptyInputError("subsample is empty");
    for (std::uint32_t i : indices) {
        if (i >= n) throw RangeError("subsample index " + std::to_string(i) + " out of range");
    }
}

std::vector<std::uint32_t> sorted_copy(std::span<const std::uint32_t> indices) {
    std::vector<std::uint32_t> s(indices.begin(), indices.end());
    std::sort(s.begin(), s.end());
    return s;
}

// Mean of sign(a_i) sign(b_i); exact since it only counts agreements.
double sign_agreement(std::span<const double> a, std::span<const double> b) {
    std::size_t agree = 0;
    for (std::size_t i = 0; i < a.size(); ++i) agree += (a[i] >= 0.0) == (b[i] >= 0.0);
    const auto n = static_cast<double>(a.size());
    return (2.0 * static_cast<double>(agree) - n) / n;
}

double subsampled_sorted(std::span<const double> x, std::span<const double> y,
                         std::span<const std::uint32_t> sorted) {
    const double s = pairwise_sum(sorted.size(), [&](std::size_t k) {
        return x[sorted[k]] * y[sorted[k]];
    });
    return s / static_cast<double>(sorted.size());
}

double quantized_subsampled_sorted(std::span<const double> x, std::span<const double> y,
                                   std::span<const std::uint32_t> sorted) {
    std::size_t agree = 0;
    for (std::uint32_t i : sorted) agree += (x[i] >= 0.0) == (y[i] >= 0.0);
    const auto m = static_cast<double>(sorted.size());
    return (2.0 * static_cast<double>(agree) - m) / m;
}

}  // namespace

std::string_view to_string(EstimatorKind kind) noexcept {
    switch (kind) {
        case EstimatorKind::Plain: return "plain";
        case EstimatorKind::PlainShort: return "plain-m";
        case EstimatorKind::Compressed: return "compressed";
        case EstimatorKind::Subsampled: return "subsampled";
        case EstimatorKind::QuantizedPlain: return "q-plain";
        case EstimatorKind::QuantizedCompressed: return "q-compressed";
        case EstimatorKind::QuantizedSubsampled: return "q-subsampled";
        case EstimatorKind::QuantizedPlainCorrected: return "q-plain-sin";
        case EstimatorKind::QuantizedCompressedCorrected: return "q-compressed-sin";
        case EstimatorKind::QuantizedSubsampledCorrected: return "q-subsampled-sin";
    }
    return "unknown";
}

std::optional<EstimatorKind> parse_estimator_kind(std::string_view name) noexcept {
    for (EstimatorKind k : kAllEstimatorKinds) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

bool is_quantized(EstimatorKind kind) noexcept {
    switch (kind) {
        case EstimatorKind::Plain:
        case EstimatorKind::PlainShort:
        case EstimatorKind::Compressed:
        case EstimatorKind::Subsampled: return false;
        default: return true;
    }
}

bool uses_compression(EstimatorKind kind) noexcept {
    return kind != EstimatorKind::Plain && kind != EstimatorKind::QuantizedPlain &&
           kind != EstimatorKind::QuantizedPlainCorrected;
}

double plain_corr(std::span<const double> x, std::span<const double> y) {
    check_pair(x, y);
    return pairwise_dot(x, y) / static_cast<double>(x.size());
}

double plain_corr(const LaggedPair& p) { return plain_corr(p.x, p.y); }

double compressed_corr(const LaggedPair& p, const Projection& scheme) {
    check_pair(p.x, p.y);
    if (scheme.kind() == ProjectionKind::SubsampleWithoutReplacement) {
        if (scheme.n() != p.size()) throw DimensionError("scheme dimension does not match window");
        return subsampled_corr(p.x, p.y, scheme.selection());
    }
    const auto px = scheme.apply(p.x);
    const auto py = scheme.apply(p.y);
    return pairwise_dot(px, py);
}

double subsampled_corr(std::span<const double> x, std::span<const double> y,
                       std::span<const std::uint32_t> indices) {
    check_pair(x, y);
    check_indices(indices, x.size());
    return subsampled_sorted(x, y, sorted_copy(indices));
}

double subsampled_corr(const LaggedPair& p, const SparseMap& indices) {
    return subsampled_corr(p.x, p.y, indices.bucket);
}

double quantized_plain(std::span<const double> x, std::span<const double> y) {
    check_pair(x, y);
    return sign_agreement(x, y);
}

double quantized_plain(const LaggedPair& p) { return quantized_plain(p.x, p.y); }

double quantized_compressed(const LaggedPair& p, const Projection& scheme) {
    check_pair(p.x, p.y);
    if (scheme.kind() == ProjectionKind::SubsampleWithoutReplacement) {
        if (scheme.n() != p.size()) throw DimensionError("scheme dimension does not match window");
        return quantized_subsampled(p.x, p.y, scheme.selection());
    }
    return sign_agreement(scheme.apply(p.x), scheme.apply(p.y));
}

double quantized_subsampled(std::span<const double> x, std::span<const double> y,
                            std::span<const std::uint32_t> indices) {
    check_pair(x, y);
    check_indices(indices, x.size());
    return quantized_subsampled_sorted(x, y, indices);
}

double quantized_subsampled(const LaggedPair& p, const SparseMap& indices) {
    return quantized_subsampled(p.x, p.y, indices.bucket);
}

double arcsin_correct(double raw) {
    if (!(std::abs(raw) <= 1.0)) throw DomainError("arcsin_correct expects a value in [-1, 1]");
    return std::sin(std::numbers::pi / 2.0 * raw);
}

namespace {

// Schemes used for one lag (or shared across all lags).
struct LagSchemes {
    std::optional<Projection> compression;
    std::vector<std::uint32_t> compression_selection;  // sorted, without-repl only
    std::vector<std::uint32_t> subsample;               // sorted
    std::vector<double> px;
    std::vector<double> py;
};

LagSchemes draw_schemes(const SeriesConfig& cfg, bool need_compression, bool need_subsample,
                        std::uint64_t seed, std::uint64_t slot) {
    LagSchemes s;
    if (need_compression) {
        s.compression = sample_scheme(cfg.scheme, cfg.n, cfg.m, derive_seed(seed, 1, slot));
        s.compression_selection = sorted_copy(s.compression->selection());
        s.px.resize(cfg.m);
        s.py.resize(cfg.m);
    }
    if (need_subsample) {
        s.subsample = sorted_copy(
            subsample_without_replacement(cfg.n, cfg.m, derive_seed(seed, 2, slot)).bucket);
    }
    return s;
}

}  // namespace

std::vector<std::vector<double>> evaluate_lags(const SignalWindow& x, const SignalWindow& y,
                                               std::span<const std::int64_t> lags,
                                               std::span<const EstimatorKind> kinds,
                                               const SeriesConfig& cfg, std::uint64_t seed) {
    if (lags.empty()) throw EmptyInputError("no lags requested");
    if (cfg.n == 0) throw EmptyInputError("window length must be positive");
    bool need_compression = false;
    bool need_subsample = false;
    bool need_m = false;
    for (EstimatorKind k : kinds) {
        need_m = need_m || uses_compression(k);
        need_compression = need_compression || k == EstimatorKind::Compressed ||
                           k == EstimatorKind::QuantizedCompressed ||
                           k == EstimatorKind::QuantizedCompressedCorrected;
        need_subsample = need_subsample || k == EstimatorKind::Subsampled ||
                         k == EstimatorKind::QuantizedSubsampled ||
                         k == EstimatorKind::QuantizedSubsampledCorrected;
    }
    if (need_m && (cfg.m == 0 || cfg.m > cfg.n)) {
        throw DimensionError("compressed estimators require 1 <= m <= n");
    }

    const std::int64_t max_lag = *std::max_element(lags.begin(), lags.end());
    const std::int64_t anchor = cfg.anchor.value_or(std::min(x.last_time(), y.last_time() - max_lag));

    const bool compression_is_subsample =
        cfg.scheme == ProjectionKind::SubsampleWithoutReplacement;
    LagSchemes shared;
    if (!cfg.fresh_scheme_per_lag) shared = draw_schemes(cfg, need_compression, need_subsample, seed, 0);

    std::vector<std::vector<double>> out(kinds.size(), std::vector<double>(lags.size()));
    bool shared_px_ready = false;
    for (std::size_t l = 0; l < lags.size(); ++l) {
        const LaggedPair pair = lagged_pair(x, y, lags[l], cfg.n, anchor);
        LagSchemes fresh;
        if (cfg.fresh_scheme_per_lag) fresh = draw_schemes(cfg, need_compression, need_subsample, seed, l + 1);
        LagSchemes& s = cfg.fresh_scheme_per_lag ? fresh : shared;

        if (need_compression && !compression_is_subsample) {
            // The x window does not move with the lag, so a shared Phi x is reused.
            if (cfg.fresh_scheme_per_lag || !shared_px_ready) {
                s.compression->apply_into(pair.x, s.px);
                shared_px_ready = true;
            }
            s.compression->apply_into(pair.y, s.py);
        }

        for (std::size_t k = 0; k < kinds.size(); ++k) {
            double v = 0.0;
            switch (kinds[k]) {
                case EstimatorKind::Plain:
                    v = plain_corr(pair.x, pair.y);
                    break;
                case EstimatorKind::PlainShort:
                    v = plain_corr(std::span<const double>(pair.x).first(cfg.m),
                                   std::span<const double>(pair.y).first(cfg.m));
                    break;
                case EstimatorKind::Compressed:
                    v = compression_is_subsample
                            ? subsampled_sorted(pair.x, pair.y, s.compression_selection)
                            : pairwise_dot(s.px, s.py);
                    break;
                case EstimatorKind::Subsampled:
                    v = subsampled_sorted(pair.x, pair.y, s.subsample);
                    break;
                case EstimatorKind::QuantizedPlain:
                case EstimatorKind::QuantizedPlainCorrected:
                    v = sign_agreement(pair.x, pair.y);
                    break;
                case EstimatorKind::QuantizedCompressed:
                case EstimatorKind::QuantizedCompressedCorrected:
                    v = compression_is_subsample
                            ? quantized_subsampled_sorted(pair.x, pair.y, s.compression_selection)
                            : sign_agreement(s.px, s.py);
                    break;
                case EstimatorKind::QuantizedSubsampled:
                case EstimatorKind::QuantizedSubsampledCorrected:
                    v = quantized_subsampled_sorted(pair.x, pair.y, s.subsample);
                    break;
            }
            if (kinds[k] == EstimatorKind::QuantizedPlainCorrected ||
                kinds[k] == EstimatorKind::QuantizedCompressedCorrected ||
                kinds[k] == EstimatorKind::QuantizedSubsampledCorrected) {
                v = arcsin_correct(v);
            }
            out[k][l] = v;
        }
    }
    return out;
}

EstimateSeries estimate_series(const SignalWindow& x, const SignalWindow& y,
                               std::span<const std::int64_t> lags, EstimatorKind kind,
                               const SeriesConfig& config, std::uint64_t seed) {
    const EstimatorKind kinds[] = {kind};
    EstimateSeries s;
    s.kind = kind;
    s.lags.assign(lags.begin(), lags.end());
    s.values = std::move(evaluate_lags(x, y, lags, kinds, config, seed).front());
    s.n = config.n;
    if (uses_compression(kind)) s.m = config.m;
    if (kind == EstimatorKind::Compressed || kind == EstimatorKind::QuantizedCompressed ||
        kind == EstimatorKind::QuantizedCompressedCorrected) {
        s.scheme = config.scheme;
    }
    return s;
}

}  // namespace ccorr
