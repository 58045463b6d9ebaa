#pragma once

#include <cstddef>
#include <cstdint>

#include "ccorr/models.hpp"
#include "ccorr/projection.hpp"

/// Closed-form second-order theory of the plain, compressed and subsampled
/// correlation estimators, and their one-bit counterparts where a closed form
/// exists. All functions are pure except mc_w_tau, which is seeded.
namespace ccorr::theory {

/// Default truncation for infinite kernel sums on models without an exact tail.
inline constexpr std::int64_t kDefaultTruncation = 4096;

/// f(k) = C_xyxy(tau,k,tau+k) + G_xy(tau+k) G_xy(tau-k) + G_xx(k) G_yy(k)
double kernel_f(const CorrelationModel& model, std::int64_t tau, std::int64_t k);

/// g(k) = C_xyxy(k+tau,0,tau+k) + 2 G_xy(tau+k)^2
double kernel_g(const CorrelationModel& model, std::int64_t tau, std::int64_t k);

/// Var[c_N] = N^-2 sum_{|k|<N} (N-|k|) f(k).
double var_cN_finite(const CorrelationModel& model, std::size_t n, std::int64_t tau);

/// E[|x|^2 |y|^2] = N^2 G_xx(0) G_yy(0) + sum_{|k|<N} (N-|k|) g(k).
double expected_norm_product(const CorrelationModel& model, std::size_t n, std::int64_t tau);

/// Variance of (Phi x)'(Phi y) for a matrix with i.i.d. entries of fourth
/// cumulant `cum4` and E[phi^2] = 1/(MN).
double var_CN_finite(const CorrelationModel& model, std::size_t n, std::size_t m, double cum4,
                     std::int64_t tau);

/// Exact finite-size variance of the compressed estimator for a concrete
/// scheme. Dense and TernaryHalf schemes use var_CN_finite with their entry
/// cumulant. TernaryHash entries in a column are dependent; its variance
/// equals the i.i.d. expression with cum4 = -2/(MN)^2. With-replacement
/// subsampling gives (1 - 1/M) Var[c_N] + (g(0) + G_xx(0) G_yy(0) - G_xy(tau)^2)/M.
/// Without-replacement delegates to var_subsampled.
double var_compressed(const CorrelationModel& model, std::size_t n, std::size_t m,
                      ProjectionKind kind, std::int64_t tau);

/// Var[CC_M] = Var[c_N] + (alpha-1)/(N-1) (f(0) - Var[c_N]), alpha = N/M.
double var_subsampled(const CorrelationModel& model, std::size_t n, std::size_t m,
                      std::int64_t tau);

/// N (Var[C_N] - Var[c_M]) at finite size.
double delta_finite(const CorrelationModel& model, std::size_t n, std::size_t m, double cum4,
                    std::int64_t tau);

/// N-scaled limits at fixed alpha = N/M.
struct AsymptoticReport {
    double v = 0.0;                   ///< sum_k f(k)
    double lim_var_cN = 0.0;          ///< v
    double lim_var_cM = 0.0;          ///< alpha v
    double lim_var_CN = 0.0;          ///< v + delta_CN_cN
    double lim_var_subsampled = 0.0;  ///< v + delta_sub_cN
    double delta_CN_cN = 0.0;
    double delta_CN_cM = 0.0;  ///< negative: compression beats M consecutive samples
    double delta_sub_cN = 0.0;
    double alpha = 1.0;
    double c4_phi = 0.0;
};

/// v(tau) = sum_k f(k). Exact for AR(1) models; otherwise summed over
/// |k| <= truncation, throwing TruncationError unless
/// |f(+-K)| + |g(+-K)| < 1e-12 (f(0) + g(0)).
double asymptotic_variance(const CorrelationModel& model, std::int64_t tau,
                           std::int64_t truncation = kDefaultTruncation);

/// Throws DomainError for alpha < 1.
AsymptoticReport asymptotics(const CorrelationModel& model, std::int64_t tau, double alpha,
                             double c4_phi, std::int64_t truncation = kDefaultTruncation);

struct GainCondition {
    bool holds = false;  ///< compressed estimator beats c_M asymptotically
    double margin = 0.0;  ///< left side minus right side
};

/// Gaussian criterion for delta(C_N, c_M) < 0:
///   sum_{k>=1} (rho_xy(tau-k) rho_xy(tau+k) + rho_xx(k) rho_yy(k))
///     > (1 + c4 + rho_xy(tau)^2 (1 + 2 c4)) / (2 (alpha - 1)).
/// Throws DomainError for alpha <= 1, UnsupportedError for non-Gaussian models.
GainCondition gaussian_gain_condition(const CorrelationModel& model, std::int64_t tau,
                                      double alpha, double c4_phi,
                                      std::int64_t truncation = kDefaultTruncation);

/// AR(1) coefficient a* at which delta(C_N, c_M) changes sign for tau = 0:
/// a*^2 = (2 + 3 c4) / (4 alpha - 2 + 3 c4). Throws DomainError for alpha <= 1.
double singularity_threshold(double alpha, double c4_phi);

/// delta(C_N, c_M) / G_xx(0)^2 for an autocorrelation (y = x) model.
double autocorr_delta(const CorrelationModel& model, std::int64_t tau, double alpha,
                      double c4_phi, std::int64_t truncation = kDefaultTruncation);

/// (2/pi) arcsin(rho_xy(tau)). Gaussian models only.
double quantized_mean(const CorrelationModel& model, std::int64_t tau);

/// Var[CC^q_M] = Var[c^q_N] + (alpha-1)/(N-1) (1 - E[c^q]^2 - Var[c^q]).
double quantized_sub_var(double var_cq, double mean_cq, std::size_t n, std::size_t m);

/// Asymptotic variance of sin(pi/2 c^q): pi^2 w (1 - rho^2) / 4.
double delta_method_var(double w_tau, double rho);

struct McEstimate {
    double value = 0.0;
    double standard_error = 0.0;
    std::size_t replicates = 0;
};

/// Monte-Carlo estimate of w(tau) = N Var[c^q_N] for an AR(1) pair model.
/// Replicate r uses seed derive_seed(seed, r); the result does not depend on
/// `workers`. Throws DomainError for fewer than 100 replicates.
McEstimate mc_w_tau(const Ar1Model& model, std::size_t n, std::int64_t tau,
                    std::size_t replicates, std::uint64_t seed, unsigned workers = 0);

}  // namespace ccorr::theory
