#pragma once

// Brute-force reference values for Gaussian pairs, computed from Isserlis'
// theorem by explicit double sums over window positions. Deliberately
// written without the library's kernels or lag-folding so that it checks
// them independently.

#include <cmath>
#include <cstdint>
#include <functional>

namespace oracle {

using Gamma = std::function<double(std::int64_t)>;

struct Pair {
    Gamma xx;
    Gamma yy;
    Gamma xy;  // E[x(t) y(t+k)]
};

inline Pair ar1_pair(double a, double c = 1.0) {
    auto g = [a](std::int64_t k) { return std::pow(a, static_cast<double>(k < 0 ? -k : k)); };
    return {g, g, [g, c](std::int64_t k) { return c * g(k); }};
}

// Cov(x_i y_i, x_j y_j) with x_i = x(t-i), y_i = y(t+tau-i).
inline double cov_products(const Pair& p, std::int64_t tau, std::int64_t i, std::int64_t j) {
    return p.xx(i - j) * p.yy(i - j) + p.xy(tau + i - j) * p.xy(tau - i + j);
}

// E[(x_i y_i)^2] - nothing subtracted.
inline double second_moment_product(const Pair& p, std::int64_t tau) {
    return p.xx(0) * p.yy(0) + 2.0 * p.xy(tau) * p.xy(tau);
}

inline double var_plain(const Pair& p, std::int64_t n, std::int64_t tau) {
    double s = 0.0;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) s += cov_products(p, tau, i, j);
    return s / static_cast<double>(n * n);
}

// E[|x|^2 |y|^2] = sum_ij E[x_i^2 y_j^2].
inline double norm_product(const Pair& p, std::int64_t n, std::int64_t tau) {
    double s = 0.0;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            const double cross = p.xy(tau + i - j);
            s += p.xx(0) * p.yy(0) + 2.0 * cross * cross;
        }
    return s;
}

// Law of total variance over an i.i.d. M x N matrix with E[phi^2] = 1/(MN)
// and entry fourth cumulant cum4:
//   Var[C|x,y] = M (s^4 (|x|^2|y|^2 + (x'y)^2) + cum4 sum_i x_i^2 y_i^2).
inline double var_compressed_iid(const Pair& p, std::int64_t n, std::int64_t m, double cum4,
                                 std::int64_t tau) {
    const double nn = static_cast<double>(n);
    const double mm = static_cast<double>(m);
    const double s2 = 1.0 / (mm * nn);
    const double vc = var_plain(p, n, tau);
    const double e_dot_sq = nn * nn * (vc + p.xy(tau) * p.xy(tau));
    const double conditional =
        mm * (s2 * s2 * (norm_product(p, n, tau) + e_dot_sq) + cum4 * nn * second_moment_product(p, tau));
    return vc + conditional;
}

// Mean of M draws without replacement from z_1..z_N, averaged over z.
inline double var_without_replacement(const Pair& p, std::int64_t n, std::int64_t m, std::int64_t tau) {
    const double nn = static_cast<double>(n);
    const double mm = static_cast<double>(m);
    const double vc = var_plain(p, n, tau);
    const double pop_var = second_moment_product(p, tau) - (vc + p.xy(tau) * p.xy(tau));
    return vc + (nn - mm) / (mm * (nn - 1.0)) * pop_var;
}

}  // namespace oracle
