#include "trendirr/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "trendirr/divergence.hpp"
#include "trendirr/efficiency.hpp"
#include "trendirr/error.hpp"
#include "trendirr/rng.hpp"
#include "trendirr/series.hpp"

namespace trendirr {

std::vector<double> shuffle_surrogate(std::span<const double> series, std::uint64_t seed) {
    if (series.empty()) throw InvalidInput("shuffle_surrogate: empty series");
    std::vector<double> v(series.begin(), series.end());
    Rng rng(seed);
    shuffle_in_place(v, rng);
    return v;
}

double evaluate_statistic(std::span<const double> series, Statistic statistic,
                          const StatConfig& cfg) {
    switch (statistic) {
        case Statistic::trend_irreversibility:
            return trend_irreversibility(series, cfg.smoothing).i_t;
        case Statistic::inefficiency:
            return inefficiency_index(binarize(series), cfg.block_l).i_star;
    }
    throw InvalidInput("evaluate_statistic: unknown statistic");
}

double quantile_linear(std::vector<double> values, double q) {
    if (values.empty()) throw InvalidInput("quantile_linear: empty sample");
    if (!(q >= 0.0 && q <= 1.0)) throw InvalidInput("quantile_linear: q must lie in [0, 1]");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

SurrogateEnsembleResult significance_test(std::span<const double> series, Statistic statistic,
                                          std::size_t n_surrogates, double alpha,
                                          std::uint64_t seed, const StatConfig& cfg) {
    if (n_surrogates < 20)
        throw InvalidInput("significance_test: need at least 20 surrogates");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw InvalidInput("significance_test: alpha must lie in (0, 1)");
    if (series.empty()) throw InvalidInput("significance_test: empty series");

    constexpr int kMaxRetries = 10;
    SurrogateEnsembleResult out;
    out.statistic_values.resize(n_surrogates);
    out.n_surrogates = n_surrogates;
    out.seed = seed;

    for (std::size_t i = 0; i < n_surrogates; ++i) {
        const std::uint64_t stream = derive_seed(seed, i);
        bool done = false;
        for (int attempt = 0; attempt <= kMaxRetries && !done; ++attempt) {
            const std::vector<double> shuffled =
                shuffle_surrogate(series, derive_seed(stream, static_cast<std::uint64_t>(attempt)));
            try {
                out.statistic_values[i] = evaluate_statistic(shuffled, statistic, cfg);
                done = true;
            } catch (const InsufficientData&) {
            } catch (const DivergenceUndefined&) {
            }
        }
        if (!done)
            throw Error("significance_test: statistic undefined on surrogate " +
                        std::to_string(i) + " after " + std::to_string(kMaxRetries) + " retries");
    }

    out.mean = std::accumulate(out.statistic_values.begin(), out.statistic_values.end(), 0.0) /
               static_cast<double>(n_surrogates);
    out.threshold_95 = quantile_linear(out.statistic_values, 1.0 - alpha);
    return out;
}

}  // namespace trendirr
