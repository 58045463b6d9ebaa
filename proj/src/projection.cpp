#include "ccorr/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ccorr/error.hpp"
#include "ccorr/random.hpp"
#include "ccorr/summation.hpp"

namespace ccorr {

namespace {

void check_dims(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) throw DimensionError("projection dimensions must be positive");
    if (m > n) {
        throw DimensionError("projection requires m <= n (got m=" + std::to_string(m) +
                             ", n=" + std::to_string(n) + ")");
    }
    if (n > UINT32_MAX) throw DimensionError("projection input dimension too large");
}

inline double flip(std::int8_t s, double v) { return s < 0 ? -v : v; }

}  // namespace

std::string_view to_string(ProjectionKind kind) noexcept {
    switch (kind) {
        case ProjectionKind::DenseGaussian: return "gaussian";
        case ProjectionKind::DenseBernoulli: return "bernoulli";
        case ProjectionKind::TernaryHalf: return "ternary-half";
        case ProjectionKind::TernaryHash: return "ternary-hash";
        case ProjectionKind::SubsampleWithReplacement: return "with-repl";
        case ProjectionKind::SubsampleWithoutReplacement: return "without-repl";
    }
    return "unknown";
}

std::optional<ProjectionKind> parse_projection_kind(std::string_view name) noexcept {
    for (ProjectionKind k : kAllProjectionKinds) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

CumulantInfo scheme_cumulants(ProjectionKind kind, std::size_t n, std::size_t m) {
    check_dims(n, m);
    const auto N = static_cast<double>(n);
    const auto M = static_cast<double>(m);
    const double mn2 = M * N * N;
    switch (kind) {
        case ProjectionKind::DenseGaussian:
            return {0.0, 0.0};
        case ProjectionKind::DenseBernoulli:
            return {-2.0 / ((M * N) * (M * N)), 0.0};
        case ProjectionKind::TernaryHalf:
            if (m < 2) throw DomainError("ternary-half requires m >= 2");
            return {(0.5 - 3.0 / M) / mn2, 0.5};
        case ProjectionKind::TernaryHash:
            return {(1.0 - 3.0 / M) / mn2, 1.0};
        case ProjectionKind::SubsampleWithReplacement:
            return {(N / M - 3.0 / M) / mn2, N / M};
        case ProjectionKind::SubsampleWithoutReplacement:
            break;
    }
    throw UnsupportedError("without-replacement subsampling has no i.i.d. entry cumulant");
}

SparseMap subsample_without_replacement(std::size_t n, std::size_t m, std::uint64_t seed) {
    check_dims(n, m);
    Rng rng(seed);
    std::vector<std::uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0U);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(m);
    return SparseMap{std::move(pool), {}};
}

Projection sample_scheme(ProjectionKind kind, std::size_t n, std::size_t m, std::uint64_t seed) {
    check_dims(n, m);
    Projection p(kind, n, m);
    Rng rng(seed);
    const auto N = static_cast<double>(n);
    const auto M = static_cast<double>(m);
    switch (kind) {
        case ProjectionKind::DenseGaussian: {
            p.scale_ = 1.0 / std::sqrt(M * N);
            p.matrix_.resize(n * m);
            for (double& e : p.matrix_) e = rng.normal() * p.scale_;
            break;
        }
        case ProjectionKind::DenseBernoulli: {
            p.scale_ = 1.0 / std::sqrt(M * N);
            p.matrix_.resize(n * m);
            for (double& e : p.matrix_) e = rng.sign() * p.scale_;
            break;
        }
        case ProjectionKind::TernaryHalf: {
            if (m < 2) throw DomainError("ternary-half requires m >= 2");
            p.scale_ = 1.0 / std::sqrt(2.0 * N);
            // Positions of nonzeros in the row-major M*N layout form a
            // Bernoulli(2/M) process; draw the geometric gaps directly.
            const double prob = 2.0 / M;
            const double log_miss = std::log1p(-prob);
            const double total = M * N;
            p.row_start_.assign(m + 1, 0);
            double pos = -1.0;
            for (;;) {
                double gap = 0.0;
                if (prob < 1.0) gap = std::floor(std::log(1.0 - rng.uniform()) / log_miss);
                pos += gap + 1.0;
                if (pos >= total) break;
                const auto flat = static_cast<std::size_t>(pos);
                p.columns_.push_back(static_cast<std::uint32_t>(flat % n));
                p.signs_.push_back(rng.sign() > 0 ? 1 : -1);
                ++p.row_start_[flat / n + 1];
            }
            std::partial_sum(p.row_start_.begin(), p.row_start_.end(), p.row_start_.begin());
            break;
        }
        case ProjectionKind::TernaryHash: {
            p.scale_ = 1.0 / std::sqrt(N);
            p.map_.bucket.resize(n);
            p.map_.sign.resize(n);
            for (std::size_t j = 0; j < n; ++j) {
                p.map_.bucket[j] = static_cast<std::uint32_t>(rng.below(m));
                p.map_.sign[j] = rng.sign() > 0 ? 1 : -1;
            }
            break;
        }
        case ProjectionKind::SubsampleWithReplacement: {
            p.scale_ = 1.0 / std::sqrt(M);
            p.map_.bucket.resize(m);
            p.map_.sign.resize(m);
            for (std::size_t i = 0; i < m; ++i) {
                p.map_.bucket[i] = static_cast<std::uint32_t>(rng.below(n));
                p.map_.sign[i] = rng.sign() > 0 ? 1 : -1;
            }
            break;
        }
        case ProjectionKind::SubsampleWithoutReplacement: {
            p.map_ = subsample_without_replacement(n, m, seed);
            break;
        }
    }
    return p;
}

std::vector<double> Projection::apply(std::span<const double> v) const {
    std::vector<double> out(m_);
    apply_into(v, out);
    return out;
}

void Projection::apply_into(std::span<const double> v, std::span<double> out) const {
    if (v.size() != n_) {
        throw DimensionError("projection expects input of length " + std::to_string(n_) +
                             ", got " + std::to_string(v.size()));
    }
    if (out.size() != m_) throw DimensionError("projection output buffer has wrong length");
    switch (kind_) {
        case ProjectionKind::DenseGaussian:
        case ProjectionKind::DenseBernoulli:
            for (std::size_t i = 0; i < m_; ++i) {
                out[i] = pairwise_dot(std::span<const double>(matrix_).subspan(i * n_, n_), v);
            }
            break;
        case ProjectionKind::TernaryHalf:
            for (std::size_t i = 0; i < m_; ++i) {
                const std::size_t begin = row_start_[i];
                const double sum = pairwise_sum(row_start_[i + 1] - begin, [&](std::size_t k) {
                    return flip(signs_[begin + k], v[columns_[begin + k]]);
                });
                out[i] = scale_ * sum;
            }
            break;
        case ProjectionKind::TernaryHash:
            std::fill(out.begin(), out.end(), 0.0);
            for (std::size_t j = 0; j < n_; ++j) out[map_.bucket[j]] += flip(map_.sign[j], v[j]);
            for (double& o : out) o *= scale_;
            break;
        case ProjectionKind::SubsampleWithReplacement:
            for (std::size_t i = 0; i < m_; ++i) {
                out[i] = scale_ * flip(map_.sign[i], v[map_.bucket[i]]);
            }
            break;
        case ProjectionKind::SubsampleWithoutReplacement:
            for (std::size_t i = 0; i < m_; ++i) out[i] = v[map_.bucket[i]];
            break;
    }
}

std::vector<double> Projection::dense() const {
    std::vector<double> d(m_ * n_, 0.0);
    switch (kind_) {
        case ProjectionKind::DenseGaussian:
        case ProjectionKind::DenseBernoulli:
            d = matrix_;
            break;
        case ProjectionKind::TernaryHalf:
            for (std::size_t i = 0; i < m_; ++i) {
                for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k) {
                    d[i * n_ + columns_[k]] = flip(signs_[k], scale_);
                }
            }
            break;
        case ProjectionKind::TernaryHash:
            for (std::size_t j = 0; j < n_; ++j) d[map_.bucket[j] * n_ + j] = flip(map_.sign[j], scale_);
            break;
        case ProjectionKind::SubsampleWithReplacement:
            for (std::size_t i = 0; i < m_; ++i) d[i * n_ + map_.bucket[i]] = flip(map_.sign[i], scale_);
            break;
        case ProjectionKind::SubsampleWithoutReplacement:
            for (std::size_t i = 0; i < m_; ++i) d[i * n_ + map_.bucket[i]] = 1.0;
            break;
    }
    return d;
}

std::size_t Projection::nonzeros() const noexcept {
    switch (kind_) {
        case ProjectionKind::DenseGaussian:
        case ProjectionKind::DenseBernoulli: return matrix_.size();
        case ProjectionKind::TernaryHalf: return columns_.size();
        default: return map_.bucket.size();
    }
}

std::span<const std::uint32_t> Projection::selection() const noexcept {
    if (kind_ != ProjectionKind::SubsampleWithoutReplacement) return {};
    return map_.bucket;
}

}  // namespace ccorr
