#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace trendirr {

/// Timestamped positive price series on a fixed sampling grid.
struct PriceSeries {
    std::vector<std::int64_t> timestamps;  // epoch seconds, strictly increasing
    std::vector<double> prices;            // > 0, same length as timestamps
    std::string symbol;                    // optional label
    std::int64_t period_seconds = 60;
};

/// Log returns ln(P_t / P_{t-1}) on a fixed grid. Entries flagged in
/// imputed_mask were synthetically filled rather than observed.
struct LogReturnSeries {
    std::vector<double> values;
    std::int64_t start_timestamp = 0;  // epoch seconds of the first return
    std::int64_t period_seconds = 60;
    std::vector<std::uint8_t> imputed_mask;
};

/// Sequence over {0, 1}.
struct BinarySeries {
    std::vector<std::uint8_t> bits;
};

/// values[i] = ln(prices[i+1] / prices[i]); length is len(p) - 1.
/// Throws InvalidInput on fewer than 2 points or a non-positive price.
LogReturnSeries log_returns(const PriceSeries& p);

/// bits[i] = 1 iff values[i] > 0, else 0 (a zero return maps to 0).
BinarySeries binarize(const LogReturnSeries& r);
BinarySeries binarize(std::span<const double> values);

}  // namespace trendirr
