#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace trendirr {

/// Step-lengths of the maximal monotone runs of a series' first differences.
/// The three multisets partition the difference sequence: the durations sum
/// to len(series) - 1.
struct TrendDurations {
    std::vector<std::int64_t> up;        // lengths of maximal '+' runs
    std::vector<std::int64_t> down;      // lengths of maximal '-' runs
    std::vector<std::int64_t> constant;  // lengths of maximal '0' runs
};

/// Normalized probability mass function over positive integer durations.
/// n_samples is the total count behind the masses; it is 0 for distributions
/// built directly from masses, which cannot be smoothed.
struct EmpiricalDistribution {
    std::vector<std::int64_t> support;  // sorted, no duplicates, all >= 1
    std::vector<double> mass;           // aligned with support, > 0, sums to 1
    std::uint64_t n_samples = 0;
};

/// Segments the series into maximal runs of increasing, decreasing, and
/// constant first differences. A run still open at the end of the series
/// is kept with its observed length. Exact equality breaks both trends;
/// no epsilon band is applied.
TrendDurations extract_trend_durations(std::span<const double> series);

/// mass(n) = count(n) / total over the distinct observed durations.
EmpiricalDistribution empirical_distribution(std::span<const std::int64_t> durations);

}  // namespace trendirr
