#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace trendirr {

enum class Statistic {
    trend_irreversibility,
    inefficiency,
};

/// Estimator settings shared by the original statistic and its surrogates.
struct StatConfig {
    double smoothing = 0.5;  // KL pseudo-count for trend_irreversibility
    int block_l = 2;         // L parameter for the inefficiency index
};

/// Shuffle-surrogate ensemble of a statistic under the iid null.
struct SurrogateEnsembleResult {
    std::vector<double> statistic_values;  // one per surrogate
    double threshold_95 = 0.0;             // empirical (1 - alpha) quantile
    double mean = 0.0;
    std::size_t n_surrogates = 0;
    std::uint64_t seed = 0;
};

/// Uniform random permutation of the series (Fisher-Yates), deterministic
/// given the seed. The value multiset is preserved exactly.
std::vector<double> shuffle_surrogate(std::span<const double> series, std::uint64_t seed);

/// The named statistic evaluated on a raw series.
double evaluate_statistic(std::span<const double> series, Statistic statistic,
                          const StatConfig& cfg);

/// Empirical quantile with linear interpolation between order statistics.
double quantile_linear(std::vector<double> values, double q);

/// Recomputes the statistic on n_surrogates independent shuffles of the
/// series, using identical estimator settings. Each surrogate draws from the
/// sub-stream derived from (seed, surrogate index), so the ensemble is
/// identical regardless of evaluation order. A surrogate on which the
/// statistic is undefined is reshuffled with a fresh sub-seed, up to 10
/// retries. The original statistic is significant iff it exceeds threshold_95.
SurrogateEnsembleResult significance_test(std::span<const double> series, Statistic statistic,
                                          std::size_t n_surrogates, double alpha,
                                          std::uint64_t seed, const StatConfig& cfg = {});

}  // namespace trendirr
