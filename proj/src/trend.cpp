#include "trendirr/trend.hpp"

#include <algorithm>
#include <cmath>

#include "trendirr/error.hpp"

namespace trendirr {

namespace {

void flush_run(TrendDurations& out, int sign, std::int64_t length) {
    if (length == 0) return;
    if (sign > 0)
        out.up.push_back(length);
    else if (sign < 0)
        out.down.push_back(length);
    else
        out.constant.push_back(length);
}

}  // namespace

TrendDurations extract_trend_durations(std::span<const double> series) {
    if (series.size() < 2)
        throw InvalidInput("extract_trend_durations: need at least 2 points");

    TrendDurations out;
    int run_sign = 0;
    std::int64_t run_length = 0;
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        const double d = series[i + 1] - series[i];
        if (!std::isfinite(d))
            throw InvalidInput("extract_trend_durations: non-finite difference");
        const int sign = (d > 0.0) - (d < 0.0);
        if (sign == run_sign) {
            ++run_length;
        } else {
            flush_run(out, run_sign, run_length);
            run_sign = sign;
            run_length = 1;
        }
    }
    flush_run(out, run_sign, run_length);
    return out;
}

EmpiricalDistribution empirical_distribution(std::span<const std::int64_t> durations) {
    if (durations.empty())
        throw InsufficientData("empirical_distribution: empty duration multiset");

    std::int64_t max_duration = 0;
    for (const std::int64_t d : durations) {
        if (d < 1) throw InvalidInput("empirical_distribution: durations must be >= 1");
        max_duration = std::max(max_duration, d);
    }

    EmpiricalDistribution dist;
    dist.n_samples = durations.size();
    const double total = static_cast<double>(durations.size());

    // Durations are run lengths, so the support is small; counting beats sorting.
    if (max_duration <= 1 << 20) {
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_duration) + 1, 0);
        for (const std::int64_t d : durations) ++counts[static_cast<std::size_t>(d)];
        for (std::int64_t n = 1; n <= max_duration; ++n) {
            const std::uint64_t c = counts[static_cast<std::size_t>(n)];
            if (c == 0) continue;
            dist.support.push_back(n);
            dist.mass.push_back(static_cast<double>(c) / total);
        }
        return dist;
    }

    std::vector<std::int64_t> sorted(durations.begin(), durations.end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        dist.support.push_back(sorted[i]);
        dist.mass.push_back(static_cast<double>(j - i) / total);
        i = j;
    }
    return dist;
}

}  // namespace trendirr
