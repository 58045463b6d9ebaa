#include "ccorr/models.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "ccorr/error.hpp"
#include "ccorr/random.hpp"

namespace ccorr {

double CorrelationModel::rho_xy(std::int64_t k) const {
    return gamma_xy(k) / std::sqrt(gamma_xx(0) * gamma_yy(0));
}

double CorrelationModel::cum4(std::int64_t a, std::int64_t b, std::int64_t c) const {
    if (is_gaussian) return 0.0;
    if (!cum4_kernel) {
        throw UnsupportedError("non-Gaussian model requires an explicit fourth-order cumulant kernel");
    }
    return cum4_kernel(a, b, c);
}

Ar1Model::Ar1Model(double a, double coupling) : params_{a, coupling} {
    if (!(std::abs(a) < 1.0)) throw DomainError("AR(1) coefficient must satisfy |a| < 1");
    if (!(std::abs(coupling) <= 1.0)) throw DomainError("coupling must satisfy |c| <= 1");
}

CorrelationModel Ar1Model::correlation() const {
    const double a = params_.a;
    const double c = params_.coupling;
    auto power = [a](std::int64_t k) {
        // std::pow(0, 0) == 1, so a = 0 gives the white-noise delta.
        return std::pow(a, static_cast<double>(std::llabs(k)));
    };
    CorrelationModel m;
    m.gamma_xx = power;
    m.gamma_yy = power;
    m.gamma_xy = [power, c](std::int64_t k) { return c * power(k); };
    m.is_gaussian = true;
    m.ar1 = params_;
    return m;
}

SignalWindow::SignalWindow(std::vector<double> samples, std::int64_t origin)
    : samples_(std::move(samples)), origin_(origin) {
    if (samples_.empty()) throw EmptyInputError("signal window has no samples");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (!std::isfinite(samples_[i])) {
            throw DomainError("non-finite sample at index " + std::to_string(i));
        }
    }
}

SignalWindow ar1_generate(double a, std::size_t n, std::uint64_t seed) {
    if (!(std::abs(a) < 1.0)) throw DomainError("AR(1) coefficient must satisfy |a| < 1");
    if (n == 0) throw EmptyInputError("ar1_generate: n must be positive");
    Rng rng(seed);
    const double innovation = std::sqrt(1.0 - a * a);
    std::vector<double> x(n);
    x[0] = rng.normal();
    for (std::size_t t = 1; t < n; ++t) x[t] = a * x[t - 1] + innovation * rng.normal();
    return SignalWindow(std::move(x));
}

SignalWindow white_gaussian(std::size_t n, std::uint64_t seed) {
    return ar1_generate(0.0, n, seed);
}

SignalPair generate_pair(const Ar1Model& model, std::size_t n, std::uint64_t seed) {
    SignalWindow x = ar1_generate(model.a(), n, derive_seed(seed, 0));
    const double c = model.coupling();
    if (c == 1.0) return {x, x};
    const SignalWindow other = ar1_generate(model.a(), n, derive_seed(seed, 1));
    const double w = std::sqrt(1.0 - c * c);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = c * x.samples()[i] + w * other.samples()[i];
    return {std::move(x), SignalWindow(std::move(y))};
}

LaggedPair lagged_pair(const SignalWindow& x, const SignalWindow& y, std::int64_t tau,
                       std::size_t n, std::optional<std::int64_t> anchor) {
    if (n == 0) throw EmptyInputError("lagged_pair: n must be positive");
    const std::int64_t t = anchor.value_or(x.last_time());
    const auto span = static_cast<std::int64_t>(n) - 1;
    if (!x.contains(t) || !x.contains(t - span)) {
        throw RangeError("lagged_pair: x lacks samples for times [" + std::to_string(t - span) +
                         ", " + std::to_string(t) + "]");
    }
    if (!y.contains(t + tau) || !y.contains(t + tau - span)) {
        throw RangeError("lagged_pair: y lacks samples for times [" +
                         std::to_string(t + tau - span) + ", " + std::to_string(t + tau) + "]");
    }
    LaggedPair p;
    p.tau = tau;
    p.x.resize(n);
    p.y.resize(n);
    const double* xs = x.samples().data() + (t - x.origin());
    const double* ys = y.samples().data() + (t + tau - y.origin());
    for (std::size_t i = 0; i < n; ++i) {
        p.x[i] = *(xs - static_cast<std::ptrdiff_t>(i));
        p.y[i] = *(ys - static_cast<std::ptrdiff_t>(i));
    }
    return p;
}

}  // namespace ccorr
