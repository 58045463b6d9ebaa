#include "ccorr/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ccorr/error.hpp"
#include "ccorr/parallel.hpp"
#include "ccorr/random.hpp"
#include "ccorr/summation.hpp"
#include "ccorr/theory.hpp"

namespace ccorr {

std::size_t compressed_dim(std::size_t n, double alpha) {
    if (!(alpha >= 1.0)) throw DomainError("compression rate alpha must be >= 1");
    const double m = std::floor(static_cast<double>(n) / alpha);
    if (m < 1.0) {
        throw DomainError("N / alpha rounds to M = 0 (N=" + std::to_string(n) +
                          ", alpha=" + std::to_string(alpha) + ")");
    }
    return static_cast<std::size_t>(m);
}

bool is_exact_rate(std::size_t n, double alpha) {
    const double q = static_cast<double>(n) / alpha;
    return q == std::floor(q);
}

namespace {

struct LagExtent {
    std::size_t length;   // samples needed per channel
    std::int64_t anchor;  // time of the newest x sample
};

LagExtent lag_extent(std::size_t n, std::span<const std::int64_t> lags) {
    const auto [lo, hi] = std::minmax_element(lags.begin(), lags.end());
    const std::int64_t before = std::max<std::int64_t>(0, -*lo);
    const std::int64_t after = std::max<std::int64_t>(0, *hi);
    return {n + static_cast<std::size_t>(before + after),
            static_cast<std::int64_t>(n) - 1 + before};
}

std::size_t index_of_lag(std::span<const std::int64_t> lags, std::int64_t lag) {
    const auto it = std::find(lags.begin(), lags.end(), lag);
    if (it == lags.end()) throw RangeError("lag " + std::to_string(lag) + " not in summary");
    return static_cast<std::size_t>(it - lags.begin());
}

std::size_t index_of_kind(std::span<const EstimatorKind> kinds, EstimatorKind kind) {
    const auto it = std::find(kinds.begin(), kinds.end(), kind);
    if (it == kinds.end()) {
        throw RangeError("estimator " + std::string(to_string(kind)) + " not in summary");
    }
    return static_cast<std::size_t>(it - kinds.begin());
}

}  // namespace

const McEntry& McSummary::entry(EstimatorKind kind, std::int64_t lag) const {
    return entries[index_of_kind(estimators, kind) * lags.size() + index_of_lag(lags, lag)];
}

std::span<const double> McSummary::replicate_values(EstimatorKind kind, std::int64_t lag) const {
    const std::size_t cell = index_of_kind(estimators, kind) * lags.size() + index_of_lag(lags, lag);
    return std::span<const double>(values).subspan(cell * replicates, replicates);
}

McSummary run_mc(const ExperimentConfig& cfg) {
    if (cfg.replicates < 2) throw DomainError("Monte-Carlo needs at least 2 replicates");
    if (cfg.lags.empty()) throw EmptyInputError("no lags requested");
    if (cfg.estimators.empty()) throw EmptyInputError("no estimators requested");
    if (cfg.n == 0) throw EmptyInputError("N must be positive");
    const auto start = std::chrono::steady_clock::now();

    McSummary s;
    s.n = cfg.n;
    if (cfg.m) {
        if (*cfg.m < 1 || *cfg.m > cfg.n) throw DimensionError("M must lie in [1, N]");
        s.m = *cfg.m;
    } else {
        s.m = compressed_dim(cfg.n, cfg.alpha);
    }
    s.replicates = cfg.replicates;
    s.estimators = cfg.estimators;
    s.lags = cfg.lags;

    const LagExtent extent = lag_extent(cfg.n, cfg.lags);
    SeriesConfig series{.n = cfg.n,
                        .m = s.m,
                        .scheme = cfg.scheme,
                        .fresh_scheme_per_lag = cfg.fresh_scheme_per_lag,
                        .anchor = extent.anchor};
    const std::size_t cells = cfg.estimators.size() * cfg.lags.size();
    const std::size_t reps = cfg.replicates;
    s.values.resize(cells * reps);

    parallel_for(reps, cfg.workers, [&](std::size_t r) {
        const SignalPair sig = generate_pair(cfg.model, extent.length, derive_seed(cfg.seed, r, 0));
        const std::uint64_t scheme_seed =
            cfg.fixed_scheme ? derive_seed(cfg.seed, UINT64_MAX, 1) : derive_seed(cfg.seed, r, 1);
        const auto est = evaluate_lags(sig.x, sig.y, cfg.lags, cfg.estimators, series, scheme_seed);
        for (std::size_t e = 0; e < est.size(); ++e) {
            for (std::size_t l = 0; l < est[e].size(); ++l) {
                s.values[(e * cfg.lags.size() + l) * reps + r] = est[e][l];
            }
        }
    });

    s.entries.reserve(cells);
    for (std::size_t e = 0; e < cfg.estimators.size(); ++e) {
        for (std::size_t l = 0; l < cfg.lags.size(); ++l) {
            const std::size_t cell = e * cfg.lags.size() + l;
            s.entries.push_back(McEntry{
                cfg.estimators[e], cfg.lags[l],
                summarize(std::span<const double>(s.values).subspan(cell * reps, reps))});
        }
    }
    s.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

PairedStatistic variance_difference(std::span<const double> a, std::span<const double> b,
                                    double scale) {
    if (a.size() != b.size()) throw DimensionError("paired series differ in length");
    const SampleStats sa = summarize(a);
    const SampleStats sb = summarize(b);
    PairedStatistic out{scale * (sa.variance - sb.variance),
                        std::numeric_limits<double>::quiet_NaN()};
    if (a.size() >= 3) {
        auto la = leave_one_out_variances(a);
        const auto lb = leave_one_out_variances(b);
        for (std::size_t i = 0; i < la.size(); ++i) la[i] = scale * (la[i] - lb[i]);
        out.standard_error = jackknife_se(la);
    }
    return out;
}

PairedStatistic variance_ratio(std::span<const double> numerator,
                               std::span<const double> denominator) {
    if (numerator.size() != denominator.size()) throw DimensionError("paired series differ in length");
    const SampleStats sn = summarize(numerator);
    const SampleStats sd = summarize(denominator);
    PairedStatistic out{sn.variance / sd.variance, std::numeric_limits<double>::quiet_NaN()};
    if (numerator.size() >= 3) {
        auto ln = leave_one_out_variances(numerator);
        const auto ld = leave_one_out_variances(denominator);
        for (std::size_t i = 0; i < ln.size(); ++i) ln[i] /= ld[i];
        out.standard_error = jackknife_se(ln);
    }
    return out;
}

double integrated_rmse(const std::vector<std::vector<double>>& per_block,
                       std::span<const double> target) {
    if (per_block.empty()) throw EmptyInputError("no blocks");
    std::vector<double> squares;
    for (const auto& row : per_block) {
        if (row.size() != target.size()) throw DimensionError("block estimate length mismatch");
        for (std::size_t l = 0; l < row.size(); ++l) {
            const double d = row[l] - target[l];
            squares.push_back(d * d);
        }
    }
    return std::sqrt(pairwise_sum(squares) / static_cast<double>(squares.size()));
}

std::vector<double> full_data_reference(const SignalWindow& x, const SignalWindow& y,
                                        std::span<const std::int64_t> lags) {
    if (x.size() != y.size() || x.origin() != y.origin()) {
        throw DimensionError("reference needs two records over the same time span");
    }
    std::vector<double> ref;
    ref.reserve(lags.size());
    for (std::int64_t tau : lags) {
        const auto shift = static_cast<std::size_t>(std::llabs(tau));
        if (shift >= x.size()) throw RangeError("lag exceeds record length");
        const std::int64_t anchor = tau >= 0 ? x.last_time() - tau : x.last_time();
        ref.push_back(plain_corr(lagged_pair(x, y, tau, x.size() - shift, anchor)));
    }
    return ref;
}

BlockReport run_blocks(const SignalWindow& x, const SignalWindow& y, std::size_t blocks,
                       const BlockConfig& cfg) {
    if (blocks < 2) throw DomainError("block evaluation needs at least 2 blocks");
    if (cfg.lags.empty()) throw EmptyInputError("no lags requested");
    if (cfg.estimators.empty()) throw EmptyInputError("no estimators requested");
    if (x.size() != y.size() || x.origin() != y.origin()) {
        throw DimensionError("x and y records must cover the same time span");
    }
    if (x.size() < blocks * cfg.n) {
        throw RangeError("record of " + std::to_string(x.size()) + " samples is shorter than " +
                         std::to_string(blocks) + " blocks of N=" + std::to_string(cfg.n));
    }
    BlockReport rep;
    rep.blocks = blocks;
    rep.block_length = x.size() / blocks;
    rep.n = cfg.n;
    rep.m = compressed_dim(cfg.n, cfg.alpha);
    rep.lags = cfg.lags;
    const LagExtent extent = lag_extent(cfg.n, cfg.lags);
    if (extent.length > rep.block_length) {
        throw RangeError("block length " + std::to_string(rep.block_length) +
                         " cannot hold N plus the lag range (" + std::to_string(extent.length) + ")");
    }

    rep.reference = full_data_reference(x, y, cfg.lags);
    const std::int64_t zero[] = {0};
    const double power_x = full_data_reference(x, x, zero).front();
    const double power_y = full_data_reference(y, y, zero).front();
    const double norm = std::sqrt(power_x * power_y);
    std::vector<double> arcsin_reference;
    for (double r : rep.reference) {
        rep.reference_normalized.push_back(r / norm);
        arcsin_reference.push_back(2.0 / std::numbers::pi *
                                   std::asin(std::clamp(r / norm, -1.0, 1.0)));
    }

    const std::size_t kinds = cfg.estimators.size();
    rep.estimates.resize(kinds);
    for (std::size_t k = 0; k < kinds; ++k) {
        rep.estimates[k].estimator = cfg.estimators[k];
        rep.estimates[k].per_block.resize(blocks);
    }
    for (std::size_t b = 0; b < blocks; ++b) {
        const auto offset = static_cast<std::ptrdiff_t>(b * rep.block_length);
        const auto len = static_cast<std::ptrdiff_t>(rep.block_length);
        const std::int64_t origin = x.origin() + offset;
        SignalWindow xb(std::vector<double>(x.samples().begin() + offset,
                                            x.samples().begin() + offset + len), origin);
        SignalWindow yb(std::vector<double>(y.samples().begin() + offset,
                                            y.samples().begin() + offset + len), origin);
        SeriesConfig series{.n = cfg.n, .m = rep.m, .scheme = cfg.scheme,
                            .fresh_scheme_per_lag = false, .anchor = origin + extent.anchor};
        auto est = evaluate_lags(xb, yb, cfg.lags, cfg.estimators, series, derive_seed(cfg.seed, b));
        for (std::size_t k = 0; k < kinds; ++k) rep.estimates[k].per_block[b] = std::move(est[k]);
    }

    for (auto& e : rep.estimates) {
        const std::size_t lags = cfg.lags.size();
        e.mean.resize(lags);
        e.stddev.resize(lags);
        std::vector<double> column(blocks);
        for (std::size_t l = 0; l < lags; ++l) {
            for (std::size_t b = 0; b < blocks; ++b) column[b] = e.per_block[b][l];
            const SampleStats s = summarize(column);
            e.mean[l] = s.mean;
            e.stddev[l] = std::sqrt(s.variance);
        }
        const bool corrected = e.estimator == EstimatorKind::QuantizedPlainCorrected ||
                               e.estimator == EstimatorKind::QuantizedCompressedCorrected ||
                               e.estimator == EstimatorKind::QuantizedSubsampledCorrected;
        const std::vector<double>& target = corrected             ? rep.reference_normalized
                                            : is_quantized(e.estimator) ? arcsin_reference
                                                                        : rep.reference;
        e.rmse = integrated_rmse(e.per_block, target);
    }
    return rep;
}

std::optional<ProjectionKind> scheme_for_c4(double c4) {
    if (c4 == 0.0) return ProjectionKind::DenseGaussian;
    if (c4 == 0.5) return ProjectionKind::TernaryHalf;
    return std::nullopt;
}

namespace {

// First sign change of f on [0, hi], refined by bisection; NaN if none.
template <typename F>
double first_zero(const F& f, double hi) {
    constexpr int kScan = 2000;
    double prev_a = 0.0;
    double prev = f(prev_a);
    for (int i = 1; i <= kScan; ++i) {
        const double a = hi * i / kScan;
        const double cur = f(a);
        if ((prev > 0.0) != (cur > 0.0)) {
            double lo = prev_a;
            double up = a;
            const bool lo_positive = prev > 0.0;
            for (int it = 0; it < 200 && up - lo > 1e-15; ++it) {
                const double mid = 0.5 * (lo + up);
                if ((f(mid) > 0.0) == lo_positive) lo = mid; else up = mid;
            }
            return 0.5 * (lo + up);
        }
        prev_a = a;
        prev = cur;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

RegionReport region_scan(std::span<const double> alphas, std::span<const double> a_grid,
                         std::span<const double> c4s, const RegionMcConfig& mc) {
    if (alphas.empty() || c4s.empty()) throw EmptyInputError("region scan needs alpha and c4 values");
    RegionReport rep;
    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
        const double alpha = alphas[ai];
        if (!(alpha > 1.0)) throw DomainError("region scan requires alpha > 1");
        const std::size_t m = compressed_dim(mc.n, alpha);
        for (std::size_t ci = 0; ci < c4s.size(); ++ci) {
            const double c4 = c4s[ci];
            const auto scheme = scheme_for_c4(c4);
            const double cum4 = scheme ? scheme_cumulants(*scheme, mc.n, m).cum4
                                       : c4 / (static_cast<double>(m) * mc.n * mc.n);
            auto asym = [&](double a) {
                return theory::asymptotics(Ar1Model(a).correlation(), 0, alpha, c4).delta_CN_cM;
            };
            auto finite = [&](double a) {
                return theory::delta_finite(Ar1Model(a).correlation(), mc.n, m, cum4, 0);
            };

            RegionThreshold th{alpha, c4, theory::singularity_threshold(alpha, c4),
                               first_zero(asym, 0.999), first_zero(finite, 0.999), std::nullopt};

            const bool run_mc_points = mc.replicates >= 3 && scheme.has_value();
            const std::size_t first_point = rep.points.size();
            for (std::size_t gi = 0; gi < a_grid.size(); ++gi) {
                const double a = a_grid[gi];
                RegionPoint p{alpha, c4, a, asym(a), finite(a), std::nullopt};
                if (run_mc_points) {
                    ExperimentConfig cfg;
                    cfg.model = Ar1Model(a);
                    cfg.n = mc.n;
                    cfg.alpha = alpha;
                    cfg.lags = {0};
                    cfg.estimators = {EstimatorKind::Compressed, EstimatorKind::PlainShort};
                    cfg.scheme = *scheme;
                    cfg.replicates = mc.replicates;
                    cfg.seed = derive_seed(mc.seed, ai, ci, gi);
                    cfg.workers = mc.workers;
                    const McSummary s = run_mc(cfg);
                    p.delta_mc = variance_difference(s.replicate_values(EstimatorKind::Compressed, 0),
                                                     s.replicate_values(EstimatorKind::PlainShort, 0),
                                                     static_cast<double>(mc.n));
                }
                rep.points.push_back(p);
            }
            if (run_mc_points) {
                for (std::size_t i = first_point; i + 1 < rep.points.size(); ++i) {
                    const double d0 = rep.points[i].delta_mc->value;
                    const double d1 = rep.points[i + 1].delta_mc->value;
                    if (d0 > 0.0 && d1 <= 0.0) {
                        const double a0 = rep.points[i].a;
                        const double a1 = rep.points[i + 1].a;
                        th.a_star_mc = a0 + (a1 - a0) * d0 / (d0 - d1);
                        break;
                    }
                }
            }
            rep.thresholds.push_back(th);
        }
    }
    return rep;
}

std::vector<BudgetRow> bit_budget_compare(const BudgetConfig& cfg) {
    if (cfg.f_bits.empty()) throw EmptyInputError("no bit widths requested");
    for (double f : cfg.f_bits) {
        if (!(f >= 1.0)) throw DomainError("bit width f must be >= 1");
    }
    ExperimentConfig q;
    q.model = Ar1Model(cfg.a);
    q.n = cfg.n;
    q.alpha = cfg.alpha;
    q.lags = cfg.lags;
    q.estimators = {EstimatorKind::QuantizedCompressedCorrected};
    q.scheme = cfg.scheme;
    q.replicates = cfg.replicates;
    q.seed = derive_seed(cfg.seed, 0);
    q.workers = cfg.workers;
    // Validate every rate before spending time on simulation.
    for (double f : cfg.f_bits) compressed_dim(cfg.n, f * cfg.alpha);
    const McSummary quantized = run_mc(q);

    std::vector<BudgetRow> rows;
    for (std::size_t fi = 0; fi < cfg.f_bits.size(); ++fi) {
        ExperimentConfig c = q;
        c.alpha = cfg.f_bits[fi] * cfg.alpha;
        c.estimators = {EstimatorKind::Compressed};
        c.seed = derive_seed(cfg.seed, fi + 1);
        const McSummary compressed = run_mc(c);
        for (std::int64_t lag : cfg.lags) {
            const double vq = quantized.entry(EstimatorKind::QuantizedCompressedCorrected, lag).stats.variance;
            const double vc = compressed.entry(EstimatorKind::Compressed, lag).stats.variance;
            rows.push_back(BudgetRow{cfg.f_bits[fi], lag, quantized.m, compressed.m, vq, vc,
                                     vq > 0.0 ? vc / vq : std::numeric_limits<double>::infinity()});
        }
    }
    return rows;
}

}  // namespace ccorr
