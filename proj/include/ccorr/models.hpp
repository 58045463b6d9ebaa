#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace ccorr {

/// Closed-form parameters of the AR(1) family: x is AR(1) with coefficient
/// `a` and unit variance, y = coupling * x + sqrt(1 - coupling^2) * x', with
/// x' an independent copy of x. coupling = 1 is the autocorrelation case.
struct Ar1Params {
    double a = 0.0;
    double coupling = 1.0;
};

/// Second-order (and optionally fourth-order) description of a jointly
/// stationary zero-mean pair (x, y).
///
/// gamma_xy(k) = E[x(t) y(t+k)]. When `is_gaussian` is false the fourth-order
/// cumulant kernel C_xyxy(a,b,c) = Cum[x(t), y(t+a), x(t+b), y(t+c)] must be
/// supplied for any variance computation.
struct CorrelationModel {
    std::function<double(std::int64_t)> gamma_xx;
    std::function<double(std::int64_t)> gamma_yy;
    std::function<double(std::int64_t)> gamma_xy;
    bool is_gaussian = true;
    std::function<double(std::int64_t, std::int64_t, std::int64_t)> cum4_kernel;
    /// Present when the model is an AR(1) instance; enables exact tail sums.
    std::optional<Ar1Params> ar1;

    /// Normalized cross-correlation gamma_xy(k) / sqrt(gamma_xx(0) gamma_yy(0)).
    double rho_xy(std::int64_t k) const;
    double rho_xx(std::int64_t k) const { return gamma_xx(k) / gamma_xx(0); }
    double rho_yy(std::int64_t k) const { return gamma_yy(k) / gamma_yy(0); }

    /// C_xyxy(a,b,c); zero for Gaussian models. Throws UnsupportedError for a
    /// non-Gaussian model without a kernel.
    double cum4(std::int64_t a, std::int64_t b, std::int64_t c) const;
};

/// AR(1) model x_t = a x_{t-1} + sqrt(1-a^2) e_t, optionally paired with a
/// partially coupled second channel (see Ar1Params).
class Ar1Model {
public:
    explicit Ar1Model(double a, double coupling = 1.0);

    double a() const noexcept { return params_.a; }
    double coupling() const noexcept { return params_.coupling; }

    /// gamma_xx = gamma_yy = a^|k|, gamma_xy = coupling * a^|k|, Gaussian.
    CorrelationModel correlation() const;

private:
    Ar1Params params_;
};

/// A contiguous run of samples; samples[i] is the value at absolute time
/// origin + i.
class SignalWindow {
public:
    /// Throws EmptyInputError for no samples, DomainError for NaN/Inf.
    explicit SignalWindow(std::vector<double> samples, std::int64_t origin = 0);

    std::span<const double> samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    std::int64_t origin() const noexcept { return origin_; }
    std::int64_t last_time() const noexcept {
        return origin_ + static_cast<std::int64_t>(samples_.size()) - 1;
    }
    bool contains(std::int64_t time) const noexcept {
        return time >= origin_ && time <= last_time();
    }
    double at(std::int64_t time) const { return samples_.at(static_cast<std::size_t>(time - origin_)); }

private:
    std::vector<double> samples_;
    std::int64_t origin_;
};

/// Aligned windows: x[i] = x_{t-i}, y[i] = y_{t+tau-i}, i = 0..n-1.
struct LaggedPair {
    std::vector<double> x;
    std::vector<double> y;
    std::int64_t tau = 0;

    std::size_t size() const noexcept { return x.size(); }
};

struct SignalPair {
    SignalWindow x;
    SignalWindow y;
};

/// Steady-state AR(1) path of n samples (x_0 drawn from N(0,1), no burn-in).
SignalWindow ar1_generate(double a, std::size_t n, std::uint64_t seed);

SignalWindow white_gaussian(std::size_t n, std::uint64_t seed);

/// Joint realization of the pair described by `model`, both of length n,
/// origin 0. When coupling == 1, y is a copy of x.
SignalPair generate_pair(const Ar1Model& model, std::size_t n, std::uint64_t seed);

/// Extract the lag-tau pair anchored at time t (default: last time of x).
/// Throws RangeError when any required sample is missing; never pads.
LaggedPair lagged_pair(const SignalWindow& x, const SignalWindow& y, std::int64_t tau,
                       std::size_t n, std::optional<std::int64_t> anchor = std::nullopt);

}  // namespace ccorr
