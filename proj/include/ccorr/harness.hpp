#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ccorr/estimators.hpp"
#include "ccorr/models.hpp"
#include "ccorr/projection.hpp"
#include "ccorr/stats.hpp"

namespace ccorr {

/// M = floor(N / alpha). Throws DomainError for alpha < 1 or M < 1.
std::size_t compressed_dim(std::size_t n, double alpha);

/// True when N / alpha is an integer (no rounding happened in compressed_dim).
bool is_exact_rate(std::size_t n, double alpha);

struct ExperimentConfig {
    Ar1Model model{0.0};
    std::size_t n = 1000;
    double alpha = 10.0;
    /// Explicit compressed length; overrides alpha when set.
    std::optional<std::size_t> m;
    std::vector<std::int64_t> lags;
    std::vector<EstimatorKind> estimators;
    ProjectionKind scheme = ProjectionKind::DenseGaussian;
    std::size_t replicates = 1000;
    std::uint64_t seed = 1;
    /// Reuse one scheme realization for every replicate (conditional variance).
    bool fixed_scheme = false;
    /// Draw a new scheme for each lag inside a replicate.
    bool fresh_scheme_per_lag = false;
    /// 0 = one per hardware thread. Never changes results.
    unsigned workers = 0;
};

struct McEntry {
    EstimatorKind estimator;
    std::int64_t lag;
    SampleStats stats;
};

/// Monte-Carlo result. Replicate values are kept so that derived statistics
/// (ratios and differences of variances) can be jackknifed.
struct McSummary {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t replicates = 0;
    std::vector<EstimatorKind> estimators;
    std::vector<std::int64_t> lags;
    std::vector<McEntry> entries;  ///< estimator-major, then lag
    double elapsed_seconds = 0.0;

    const McEntry& entry(EstimatorKind kind, std::int64_t lag) const;
    /// Replicate values of one (estimator, lag) cell, in replicate order.
    std::span<const double> replicate_values(EstimatorKind kind, std::int64_t lag) const;

    std::vector<double> values;  ///< [estimator][lag][replicate]
};

/// Replicate r draws its signal from derive_seed(seed, r, 0) and its schemes
/// from derive_seed(seed, r, 1). Throws DomainError for fewer than 2 replicates.
McSummary run_mc(const ExperimentConfig& config);

/// Jackknife of N * (Var[a] - Var[b]) over paired replicates.
struct PairedStatistic {
    double value = 0.0;
    double standard_error = 0.0;
};
PairedStatistic variance_difference(std::span<const double> a, std::span<const double> b,
                                    double scale = 1.0);
PairedStatistic variance_ratio(std::span<const double> numerator, std::span<const double> denominator);

struct BlockConfig {
    std::size_t n = 2000;
    double alpha = 10.0;
    std::vector<std::int64_t> lags;
    std::vector<EstimatorKind> estimators;
    ProjectionKind scheme = ProjectionKind::TernaryHalf;
    std::uint64_t seed = 1;
};

struct BlockEstimate {
    EstimatorKind estimator;
    std::vector<double> mean;    ///< per lag, across blocks
    std::vector<double> stddev;  ///< per lag, sample standard deviation across blocks
    double rmse = 0.0;           ///< integrated over lags and blocks
    std::vector<std::vector<double>> per_block;  ///< [block][lag]
};

struct BlockReport {
    std::size_t blocks = 0;
    std::size_t block_length = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::int64_t> lags;
    std::vector<double> reference;             ///< full-data plain estimate
    std::vector<double> reference_normalized;  ///< reference / sqrt(ref_xx(0) ref_yy(0))
    std::vector<BlockEstimate> estimates;
};

/// sqrt(mean over blocks and lags of (value - target)^2).
double integrated_rmse(const std::vector<std::vector<double>>& per_block,
                       std::span<const double> target);

/// Full-data plain estimate at each lag, using every available pair.
std::vector<double> full_data_reference(const SignalWindow& x, const SignalWindow& y,
                                        std::span<const std::int64_t> lags);

/// Split the record into `blocks` equal consecutive blocks, evaluate every
/// estimator on the first N samples of each block and score it against the
/// full-data reference. Quantized raw estimates are scored against
/// (2/pi) arcsin of the normalized reference, corrected ones against the
/// normalized reference, all others against the reference itself.
BlockReport run_blocks(const SignalWindow& x, const SignalWindow& y, std::size_t blocks,
                       const BlockConfig& config);

struct RegionMcConfig {
    std::size_t n = 1000;
    std::size_t replicates = 0;  ///< 0 disables the Monte-Carlo columns
    std::uint64_t seed = 1;
    unsigned workers = 0;
};

struct RegionPoint {
    double alpha;
    double c4;
    double a;
    double delta_asymptotic;
    double delta_finite;
    std::optional<PairedStatistic> delta_mc;
};

struct RegionThreshold {
    double alpha;
    double c4;
    double a_star;            ///< closed form
    double a_star_bisection;  ///< zero of the asymptotic delta
    double a_star_finite;     ///< first zero of the finite-N delta (NaN if none)
    std::optional<double> a_star_mc;  ///< interpolated first MC sign change on the grid
};

struct RegionReport {
    std::vector<RegionPoint> points;
    std::vector<RegionThreshold> thresholds;
};

/// Projection used to realize a given c4 in simulation: 0 -> gaussian,
/// 1/2 -> ternary-half. Other values have no Monte-Carlo counterpart.
std::optional<ProjectionKind> scheme_for_c4(double c4);

/// Sign map of delta(C_N, c_M) at tau = 0 over (alpha, a, c4) for AR(1).
RegionReport region_scan(std::span<const double> alphas, std::span<const double> a_grid,
                         std::span<const double> c4s, const RegionMcConfig& mc);

struct BudgetConfig {
    double a = 0.7;
    std::size_t n = 1024;
    double alpha = 10.0;
    std::vector<double> f_bits{8.0, 16.0};
    std::vector<std::int64_t> lags;
    std::size_t replicates = 1000;
    ProjectionKind scheme = ProjectionKind::DenseGaussian;
    std::uint64_t seed = 1;
    unsigned workers = 0;
};

struct BudgetRow {
    double f;
    std::int64_t lag;
    std::size_t m_quantized;
    std::size_t m_compressed;
    double var_quantized;   ///< sin-corrected quantized compressed, rate alpha
    double var_compressed;  ///< compressed, rate f * alpha
    double ratio;           ///< var_compressed / var_quantized (inf when var_quantized = 0)
};

/// Equal-bit-budget comparison: M one-bit samples against M/f full-precision ones.
std::vector<BudgetRow> bit_budget_compare(const BudgetConfig& config);

}  // namespace ccorr
