#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ccorr {

/// Replicate summary of one scalar statistic.
///
/// `variance` is the unbiased sample variance. `se_mean` is sqrt(variance/n).
/// `se_variance` is the delete-one jackknife standard error of the sample
/// variance; it needs at least three replicates and is NaN otherwise.
struct SampleStats {
    std::size_t count = 0;
    double mean = 0.0;
    double variance = 0.0;
    double se_mean = 0.0;
    double se_variance = 0.0;
};

SampleStats summarize(std::span<const double> values);

/// Sample variance of `values` with element i removed, for every i.
/// Closed form, O(n). Requires n >= 3.
std::vector<double> leave_one_out_variances(std::span<const double> values);

/// Jackknife standard error from the delete-one replicates of a statistic:
/// sqrt((n-1)/n * sum_i (theta_i - mean(theta))^2).
double jackknife_se(std::span<const double> leave_one_out);

}  // namespace ccorr
