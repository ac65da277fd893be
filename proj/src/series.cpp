#include "trendirr/series.hpp"

#include <cmath>

#include "trendirr/error.hpp"

namespace trendirr {

LogReturnSeries log_returns(const PriceSeries& p) {
    if (p.prices.size() != p.timestamps.size())
        throw InvalidInput("log_returns: timestamps and prices differ in length");
    if (p.prices.size() < 2)
        throw InvalidInput("log_returns: need at least 2 price points");
    for (std::size_t i = 1; i < p.timestamps.size(); ++i)
        if (p.timestamps[i] <= p.timestamps[i - 1])
            throw InvalidInput("log_returns: timestamps must be strictly increasing");

    LogReturnSeries out;
    out.values.reserve(p.prices.size() - 1);
    for (std::size_t i = 0; i + 1 < p.prices.size(); ++i) {
        const double a = p.prices[i];
        const double b = p.prices[i + 1];
        if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
            throw InvalidInput("log_returns: prices must be positive and finite");
        out.values.push_back(std::log(b / a));
    }
    out.start_timestamp = p.timestamps[1];
    out.period_seconds = p.period_seconds;
    out.imputed_mask.assign(out.values.size(), 0);
    return out;
}

BinarySeries binarize(std::span<const double> values) {
    if (values.empty()) throw InvalidInput("binarize: empty series");
    BinarySeries out;
    out.bits.reserve(values.size());
    for (const double v : values) out.bits.push_back(v > 0.0 ? 1 : 0);
    return out;
}

BinarySeries binarize(const LogReturnSeries& r) {
    return binarize(std::span<const double>(r.values));
}

}  // namespace trendirr
