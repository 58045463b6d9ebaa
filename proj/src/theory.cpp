#include "ccorr/theory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "ccorr/error.hpp"
#include "ccorr/estimators.hpp"
#include "ccorr/parallel.hpp"
#include "ccorr/random.hpp"
#include "ccorr/stats.hpp"
#include "ccorr/summation.hpp"

namespace ccorr::theory {

namespace {

void require_cumulants(const CorrelationModel& model) {
    if (!model.is_gaussian && !model.cum4_kernel) {
        throw UnsupportedError("non-Gaussian model requires an explicit fourth-order cumulant kernel");
    }
}

void require_positive(std::size_t n, const char* what) {
    if (n == 0) throw EmptyInputError(std::string(what) + " must be positive");
}

void require_dims(std::size_t n, std::size_t m) {
    require_positive(n, "N");
    require_positive(m, "M");
    if (m > n) throw DimensionError("theory requires M <= N");
}

double power_product(const CorrelationModel& model) {
    return model.gamma_xx(0) * model.gamma_yy(0);
}

// sum_{|k|<N} (N - |k|) h(k)
template <typename Kernel>
double triangular_sum(std::size_t n, const Kernel& h) {
    const auto last = static_cast<std::int64_t>(n) - 1;
    return pairwise_sum(2 * n - 1, [&](std::size_t i) {
        const std::int64_t k = static_cast<std::int64_t>(i) - last;
        return static_cast<double>(n - static_cast<std::size_t>(std::llabs(k))) * h(k);
    });
}

// sum_{k=-K}^{K} h(k)
template <typename Kernel>
double symmetric_sum(std::int64_t truncation, const Kernel& h) {
    return pairwise_sum(static_cast<std::size_t>(2 * truncation + 1), [&](std::size_t i) {
        return h(static_cast<std::int64_t>(i) - truncation);
    });
}

void check_tail(const CorrelationModel& model, std::int64_t tau, std::int64_t truncation) {
    if (truncation < 1) throw DomainError("truncation must be at least 1");
    const double scale = std::abs(kernel_f(model, tau, 0)) + std::abs(kernel_g(model, tau, 0));
    const double tail = std::abs(kernel_f(model, tau, truncation)) +
                        std::abs(kernel_g(model, tau, truncation)) +
                        std::abs(kernel_f(model, tau, -truncation)) +
                        std::abs(kernel_g(model, tau, -truncation));
    if (!(tail < 1e-12 * scale)) {
        throw TruncationError("kernel tail at K=" + std::to_string(truncation) +
                              " has not decayed below 1e-12 of its peak");
    }
}

// Exact lag sums for the AR(1) family with |a| < 1.
struct Ar1Sums {
    double auto_sum;      // sum_k a^{2|k|}
    double cross_sum;     // sum_k a^{|tau-k| + |tau+k|}
    double auto_tail;     // sum_{k>=1} a^{2k}
    double cross_tail;    // sum_{k>=1} a^{|tau-k| + |tau+k|}
    double lag_power;     // a^{2|tau|}
};

Ar1Sums ar1_sums(double a, std::int64_t tau) {
    const double a2 = a * a;
    const auto t = static_cast<double>(std::llabs(tau));
    const double p = std::pow(a2, t);
    const double geo = a2 / (1.0 - a2);
    return Ar1Sums{
        .auto_sum = (1.0 + a2) / (1.0 - a2),
        .cross_sum = (2.0 * t + 1.0) * p + 2.0 * p * geo,
        .auto_tail = geo,
        .cross_tail = t * p + p * geo,
        .lag_power = p,
    };
}

}  // namespace

double kernel_f(const CorrelationModel& model, std::int64_t tau, std::int64_t k) {
    return model.cum4(tau, k, tau + k) + model.gamma_xy(tau + k) * model.gamma_xy(tau - k) +
           model.gamma_xx(k) * model.gamma_yy(k);
}

double kernel_g(const CorrelationModel& model, std::int64_t tau, std::int64_t k) {
    const double c = model.gamma_xy(tau + k);
    return model.cum4(k + tau, 0, tau + k) + 2.0 * c * c;
}

double var_cN_finite(const CorrelationModel& model, std::size_t n, std::int64_t tau) {
    require_cumulants(model);
    require_positive(n, "N");
    const auto N = static_cast<double>(n);
    return triangular_sum(n, [&](std::int64_t k) { return kernel_f(model, tau, k); }) / (N * N);
}

double expected_norm_product(const CorrelationModel& model, std::size_t n, std::int64_t tau) {
    require_cumulants(model);
    require_positive(n, "N");
    const auto N = static_cast<double>(n);
    return N * N * power_product(model) +
           triangular_sum(n, [&](std::int64_t k) { return kernel_g(model, tau, k); });
}

double var_CN_finite(const CorrelationModel& model, std::size_t n, std::size_t m, double cum4,
                     std::int64_t tau) {
    require_cumulants(model);
    require_dims(n, m);
    const auto N = static_cast<double>(n);
    const auto M = static_cast<double>(m);
    const double vc = var_cN_finite(model, n, tau);
    const double power = power_product(model);
    const double gxy = model.gamma_xy(tau);
    const double gsum = triangular_sum(n, [&](std::int64_t k) { return kernel_g(model, tau, k); });
    return (1.0 + 1.0 / M) * vc + M * N * cum4 * (kernel_g(model, tau, 0) + power) +
           (power + gxy * gxy + gsum / (N * N)) / M;
}

double var_compressed(const CorrelationModel& model, std::size_t n, std::size_t m,
                      ProjectionKind kind, std::int64_t tau) {
    require_dims(n, m);
    const auto N = static_cast<double>(n);
    const auto M = static_cast<double>(m);
    switch (kind) {
        case ProjectionKind::DenseGaussian:
        case ProjectionKind::DenseBernoulli:
        case ProjectionKind::TernaryHalf:
            return var_CN_finite(model, n, m, scheme_cumulants(kind, n, m).cum4, tau);
        case ProjectionKind::TernaryHash:
            return var_CN_finite(model, n, m, -2.0 / ((M * N) * (M * N)), tau);
        case ProjectionKind::SubsampleWithReplacement: {
            const double vc = var_cN_finite(model, n, tau);
            const double gxy = model.gamma_xy(tau);
            return (1.0 - 1.0 / M) * vc +
                   (kernel_g(model, tau, 0) + power_product(model) - gxy * gxy) / M;
        }
        case ProjectionKind::SubsampleWithoutReplacement:
            return var_subsampled(model, n, m, tau);
    }
    throw UnsupportedError("unknown projection kind");
}

double var_subsampled(const CorrelationModel& model, std::size_t n, std::size_t m,
                      std::int64_t tau) {
    require_cumulants(model);
    require_dims(n, m);
    const double vc = var_cN_finite(model, n, tau);
    if (n == 1) return vc;
    const double alpha = static_cast<double>(n) / static_cast<double>(m);
    return vc + (alpha - 1.0) / (static_cast<double>(n) - 1.0) * (kernel_f(model, tau, 0) - vc);
}

double delta_finite(const CorrelationModel& model, std::size_t n, std::size_t m, double cum4,
                    std::int64_t tau) {
    return static_cast<double>(n) *
           (var_CN_finite(model, n, m, cum4, tau) - var_cN_finite(model, m, tau));
}

double asymptotic_variance(const CorrelationModel& model, std::int64_t tau,
                           std::int64_t truncation) {
    require_cumulants(model);
    if (model.ar1) {
        const auto s = ar1_sums(model.ar1->a, tau);
        const double c = model.ar1->coupling;
        return c * c * s.cross_sum + s.auto_sum;
    }
    check_tail(model, tau, truncation);
    return symmetric_sum(truncation, [&](std::int64_t k) { return kernel_f(model, tau, k); });
}

AsymptoticReport asymptotics(const CorrelationModel& model, std::int64_t tau, double alpha,
                             double c4_phi, std::int64_t truncation) {
    if (!(alpha >= 1.0)) throw DomainError("compression rate alpha must be >= 1");
    AsymptoticReport r;
    r.alpha = alpha;
    r.c4_phi = c4_phi;
    r.v = asymptotic_variance(model, tau, truncation);
    const double power = power_product(model);
    const double gxy = model.gamma_xy(tau);
    r.delta_CN_cN = alpha * (power + gxy * gxy) + (power + kernel_g(model, tau, 0)) * c4_phi;
    r.delta_CN_cM = (1.0 - alpha) * r.v + r.delta_CN_cN;
    r.delta_sub_cN = (alpha - 1.0) * kernel_f(model, tau, 0);
    r.lim_var_cN = r.v;
    r.lim_var_cM = alpha * r.v;
    r.lim_var_CN = r.v + r.delta_CN_cN;
    r.lim_var_subsampled = r.v + r.delta_sub_cN;
    return r;
}

GainCondition gaussian_gain_condition(const CorrelationModel& model, std::int64_t tau,
                                      double alpha, double c4_phi, std::int64_t truncation) {
    if (!(alpha > 1.0)) throw DomainError("gain condition requires alpha > 1");
    if (!model.is_gaussian) throw UnsupportedError("gain condition assumes jointly Gaussian signals");
    double lhs = 0.0;
    if (model.ar1) {
        const auto s = ar1_sums(model.ar1->a, tau);
        const double c = model.ar1->coupling;
        lhs = c * c * s.cross_tail + s.auto_tail;
    } else {
        check_tail(model, tau, truncation);
        lhs = pairwise_sum(static_cast<std::size_t>(truncation), [&](std::size_t i) {
            const auto k = static_cast<std::int64_t>(i) + 1;
            return model.rho_xy(tau - k) * model.rho_xy(tau + k) + model.rho_xx(k) * model.rho_yy(k);
        });
    }
    const double rho = model.rho_xy(tau);
    const double rhs = (1.0 + c4_phi + rho * rho * (1.0 + 2.0 * c4_phi)) / (2.0 * (alpha - 1.0));
    return GainCondition{lhs > rhs, lhs - rhs};
}

double singularity_threshold(double alpha, double c4_phi) {
    if (!(alpha > 1.0)) throw DomainError("singularity threshold requires alpha > 1");
    return std::sqrt((2.0 + 3.0 * c4_phi) / (4.0 * alpha - 2.0 + 3.0 * c4_phi));
}

double autocorr_delta(const CorrelationModel& model, std::int64_t tau, double alpha,
                      double c4_phi, std::int64_t truncation) {
    if (!(alpha >= 1.0)) throw DomainError("compression rate alpha must be >= 1");
    const bool same_signal = model.ar1 ? model.ar1->coupling == 1.0
                                       : std::abs(model.gamma_xy(0) - model.gamma_xx(0)) <=
                                             1e-12 * std::abs(model.gamma_xx(0));
    if (!same_signal) throw DomainError("autocorr_delta requires an autocorrelation model (y = x)");
    double sum = 0.0;
    if (model.ar1) {
        const auto s = ar1_sums(model.ar1->a, tau);
        sum = s.cross_sum + s.auto_sum;
    } else {
        check_tail(model, tau, truncation);
        sum = symmetric_sum(truncation, [&](std::int64_t k) {
            const double r = model.rho_xx(k);
            return model.rho_xx(tau - k) * model.rho_xx(tau + k) + r * r;
        });
    }
    const double rho = model.rho_xx(tau);
    return (alpha + c4_phi) + (alpha + 2.0 * c4_phi) * rho * rho + (1.0 - alpha) * sum;
}

double quantized_mean(const CorrelationModel& model, std::int64_t tau) {
    if (!model.is_gaussian) throw UnsupportedError("arcsin law requires a jointly Gaussian model");
    const double rho = std::clamp(model.rho_xy(tau), -1.0, 1.0);
    return 2.0 / std::numbers::pi * std::asin(rho);
}

double quantized_sub_var(double var_cq, double mean_cq, std::size_t n, std::size_t m) {
    require_dims(n, m);
    if (!(var_cq >= 0.0)) throw DomainError("variance of c^q must be non-negative");
    if (!(std::abs(mean_cq) <= 1.0)) throw DomainError("mean of c^q must lie in [-1, 1]");
    if (n == 1) return var_cq;
    const double alpha = static_cast<double>(n) / static_cast<double>(m);
    return var_cq + (alpha - 1.0) / (static_cast<double>(n) - 1.0) *
                        (1.0 - mean_cq * mean_cq - var_cq);
}

double delta_method_var(double w_tau, double rho) {
    if (!(w_tau >= 0.0)) throw DomainError("w(tau) must be non-negative");
    if (!(std::abs(rho) <= 1.0)) throw DomainError("correlation must lie in [-1, 1]");
    return std::numbers::pi * std::numbers::pi * w_tau * (1.0 - rho * rho) / 4.0;
}

McEstimate mc_w_tau(const Ar1Model& model, std::size_t n, std::int64_t tau,
                    std::size_t replicates, std::uint64_t seed, unsigned workers) {
    require_positive(n, "N");
    if (replicates < 100) throw DomainError("mc_w_tau needs at least 100 replicates");
    const auto shift = static_cast<std::size_t>(std::llabs(tau));
    const std::int64_t anchor =
        static_cast<std::int64_t>(n) - 1 + (tau < 0 ? static_cast<std::int64_t>(shift) : 0);
    std::vector<double> values(replicates);
    parallel_for(replicates, workers, [&](std::size_t r) {
        const SignalPair sig = generate_pair(model, n + shift, derive_seed(seed, r));
        values[r] = quantized_plain(lagged_pair(sig.x, sig.y, tau, n, anchor));
    });
    const SampleStats s = summarize(values);
    const auto N = static_cast<double>(n);
    return McEstimate{N * s.variance, N * s.se_variance, replicates};
}

}  // namespace ccorr::theory
