#include "ccorr/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ccorr/error.hpp"
#include "ccorr/summation.hpp"

namespace ccorr {

namespace {

double mean_of(std::span<const double> v) {
    return pairwise_sum(v) / static_cast<double>(v.size());
}

double centered_sum_squares(std::span<const double> v, double mean) {
    return pairwise_sum(v.size(), [&](std::size_t i) {
        const double d = v[i] - mean;
        return d * d;
    });
}

}  // namespace

SampleStats summarize(std::span<const double> values) {
    if (values.empty()) throw EmptyInputError("summarize: no values");
    SampleStats s;
    s.count = values.size();
    s.mean = mean_of(values);
    const auto n = static_cast<double>(values.size());
    if (values.size() < 2) {
        s.variance = std::numeric_limits<double>::quiet_NaN();
        s.se_mean = s.variance;
        s.se_variance = s.variance;
        return s;
    }
    s.variance = centered_sum_squares(values, s.mean) / (n - 1.0);
    s.se_mean = std::sqrt(s.variance / n);
    if (values.size() < 3) {
        s.se_variance = std::numeric_limits<double>::quiet_NaN();
    } else {
        const auto loo = leave_one_out_variances(values);
        s.se_variance = jackknife_se(loo);
    }
    return s;
}

std::vector<double> leave_one_out_variances(std::span<const double> values) {
    const std::size_t count = values.size();
    if (count < 3) throw DomainError("leave_one_out_variances: need at least 3 values");
    const auto n = static_cast<double>(count);
    const double mean = mean_of(values);
    const double total = centered_sum_squares(values, mean);
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double d = values[i] - mean;
        const double reduced = total - d * d * n / (n - 1.0);
        out[i] = std::max(reduced, 0.0) / (n - 2.0);
    }
    return out;
}

double jackknife_se(std::span<const double> leave_one_out) {
    const std::size_t count = leave_one_out.size();
    if (count < 2) return std::numeric_limits<double>::quiet_NaN();
    const auto n = static_cast<double>(count);
    const double mean = mean_of(leave_one_out);
    return std::sqrt((n - 1.0) / n * centered_sum_squares(leave_one_out, mean));
}

}  // namespace ccorr
