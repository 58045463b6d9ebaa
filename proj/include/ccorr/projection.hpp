#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ccorr {

/// Compression constructions R^N -> R^M. All but SubsampleWithoutReplacement
/// have identically distributed entries with E[phi] = 0, E[phi^2] = 1/(MN).
enum class ProjectionKind {
    DenseGaussian,                ///< phi ~ N(0, 1/(MN))
    DenseBernoulli,               ///< phi = +-1/sqrt(MN)
    TernaryHalf,                  ///< phi = +-1/sqrt(2N) w.p. 1/M each, else 0
    TernaryHash,                  ///< one +-1/sqrt(N) per column, row uniform
    SubsampleWithReplacement,     ///< one +-1/sqrt(M) per row, column uniform
    SubsampleWithoutReplacement,  ///< M distinct columns, unscaled gather
};

std::string_view to_string(ProjectionKind kind) noexcept;

/// Accepts gaussian | bernoulli | ternary-half | ternary-hash | with-repl | without-repl.
std::optional<ProjectionKind> parse_projection_kind(std::string_view name) noexcept;

inline constexpr ProjectionKind kAllProjectionKinds[] = {
    ProjectionKind::DenseGaussian,  ProjectionKind::DenseBernoulli,
    ProjectionKind::TernaryHalf,    ProjectionKind::TernaryHash,
    ProjectionKind::SubsampleWithReplacement, ProjectionKind::SubsampleWithoutReplacement,
};

/// Fourth cumulant of a single entry and its limit constant lim M N^2 Cum4.
struct CumulantInfo {
    double cum4 = 0.0;
    double c4_phi = 0.0;
};

/// Exact finite-size cumulants. For SubsampleWithReplacement c4_phi is
/// reported at the finite rate N/M. Throws UnsupportedError for
/// SubsampleWithoutReplacement.
CumulantInfo scheme_cumulants(ProjectionKind kind, std::size_t n, std::size_t m);

/// Index/sign description of a one-nonzero-per-line matrix (0-based).
///   TernaryHash:                bucket[j] in [0, M) for each column j, sign[j] = +-1
///   SubsampleWithReplacement:   bucket[i] in [0, N) for each row i, sign[i] = +-1
///   SubsampleWithoutReplacement: bucket = M distinct column indices in draw
///                               order, sign empty
struct SparseMap {
    std::vector<std::uint32_t> bucket;
    std::vector<std::int8_t> sign;
};

/// M distinct indices from [0, n), uniform over subsets, by a partial
/// Fisher-Yates shuffle. Throws DimensionError when m > n or m == 0.
SparseMap subsample_without_replacement(std::size_t n, std::size_t m, std::uint64_t seed);

/// A realized, immutable compression operator. Dense kinds store the M x N
/// matrix row-major; sparse kinds store only their index structure.
class Projection {
public:
    ProjectionKind kind() const noexcept { return kind_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return m_; }

    /// Phi v. Throws DimensionError unless v.size() == n().
    std::vector<double> apply(std::span<const double> v) const;
    void apply_into(std::span<const double> v, std::span<double> out) const;

    /// Materialized M x N matrix (row-major). Diagnostics and tests only.
    std::vector<double> dense() const;

    /// Number of structurally nonzero entries.
    std::size_t nonzeros() const noexcept;

    /// Selected columns for SubsampleWithoutReplacement, empty otherwise.
    std::span<const std::uint32_t> selection() const noexcept;

    friend Projection sample_scheme(ProjectionKind, std::size_t, std::size_t, std::uint64_t);

private:
    Projection(ProjectionKind kind, std::size_t n, std::size_t m)
        : kind_(kind), n_(n), m_(m) {}

    ProjectionKind kind_;
    std::size_t n_;
    std::size_t m_;
    double scale_ = 1.0;
    std::vector<double> matrix_;           // dense kinds
    std::vector<std::uint32_t> row_start_;  // TernaryHalf (CSR)
    std::vector<std::uint32_t> columns_;    // TernaryHalf (CSR)
    std::vector<std::int8_t> signs_;        // TernaryHalf (CSR)
    SparseMap map_;                         // hash and subsampling kinds
};

/// Draw a realization. Throws DimensionError unless 1 <= m <= n, and
/// DomainError for TernaryHalf with m < 2.
Projection sample_scheme(ProjectionKind kind, std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace ccorr
