#pragma once

#include <cstddef>
#include <span>

namespace ccorr {

namespace detail {

inline constexpr std::size_t kPairwiseBlock = 32;

template <typename Term>
double pairwise_range(std::size_t begin, std::size_t end, const Term& term) {
    if (end - begin <= kPairwiseBlock) {
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) acc += term(i);
        return acc;
    }
    const std::size_t mid = begin + (end - begin) / 2;
    return pairwise_range(begin, mid, term) + pairwise_range(mid, end, term);
}

}  // namespace detail

/// Cascade summation of term(0) + ... + term(n-1). Blocks of 32 are summed
/// left to right, blocks are combined as a balanced binary tree. The result
/// depends only on n and the terms, never on threading.
template <typename Term>
double pairwise_sum(std::size_t n, const Term& term) {
    return n == 0 ? 0.0 : detail::pairwise_range(0, n, term);
}

inline double pairwise_sum(std::span<const double> v) {
    return pairwise_sum(v.size(), [v](std::size_t i) { return v[i]; });
}

/// Inner product with cascade summation. Sizes must agree (unchecked).
inline double pairwise_dot(std::span<const double> a, std::span<const double> b) {
    return pairwise_sum(a.size(), [a, b](std::size_t i) { return a[i] * b[i]; });
}

}  // namespace ccorr
