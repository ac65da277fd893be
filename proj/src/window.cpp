#include "trendirr/window.hpp"

#include <cmath>
#include <limits>

#include "trendirr/divergence.hpp"
#include "trendirr/efficiency.hpp"
#include "trendirr/error.hpp"
#include "trendirr/rng.hpp"
#include "trendirr/surrogate.hpp"

namespace trendirr {

namespace {

void check_config(const WindowConfig& cfg) {
    if (cfg.window_minutes <= 0 || cfg.step_minutes <= 0)
        throw InvalidInput("run_windows: window and step must be positive");
    if (cfg.step_minutes > cfg.window_minutes)
        throw InvalidInput("run_windows: step must not exceed the window");
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
        throw InvalidInput("run_windows: alpha must lie in (0, 1)");
    if (!(cfg.smoothing >= 0.0))
        throw InvalidInput("run_windows: smoothing must be >= 0");
    if (cfg.block_l < 1) throw InvalidInput("run_windows: block length must be >= 1");
}

}  // namespace

std::vector<WindowResult> run_windows(const LogReturnSeries& returns, const WindowConfig& cfg) {
    check_config(cfg);
    const std::int64_t n = static_cast<std::int64_t>(returns.values.size());
    if (n < cfg.window_minutes)
        throw InsufficientData("run_windows: series shorter than one window");

    const StatConfig stat_cfg{cfg.smoothing, cfg.block_l};
    const std::int64_t count = (n - cfg.window_minutes) / cfg.step_minutes + 1;
    constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

    std::vector<WindowResult> results;
    results.reserve(static_cast<std::size_t>(count));
    for (std::int64_t w = 0; w < count; ++w) {
        const std::int64_t offset = w * cfg.step_minutes;
        const std::span<const double> slice(returns.values.data() + offset,
                                            static_cast<std::size_t>(cfg.window_minutes));
        const std::uint64_t window_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(w));

        WindowResult res;
        res.window_start = returns.start_timestamp + offset * returns.period_seconds;
        try {
            res.i_t = trend_irreversibility(slice, cfg.smoothing).i_t;
            const SurrogateEnsembleResult ens =
                significance_test(slice, Statistic::trend_irreversibility, cfg.n_surrogates,
                                  cfg.alpha, derive_seed(window_seed, 0), stat_cfg);
            res.i_t_threshold = ens.threshold_95;
            res.i_t_significant = res.i_t > res.i_t_threshold;
        } catch (const InsufficientData&) {
            res.i_t = kNan;
            res.i_t_threshold = kNan;
        } catch (const DivergenceUndefined&) {
            res.i_t = kNan;
            res.i_t_threshold = kNan;
        }
        try {
            res.i_star = inefficiency_index(binarize(slice), cfg.block_l).i_star;
            const SurrogateEnsembleResult ens =
                significance_test(slice, Statistic::inefficiency, cfg.n_surrogates, cfg.alpha,
                                  derive_seed(window_seed, 1), stat_cfg);
            res.i_star_threshold = ens.threshold_95;
            res.i_star_significant = res.i_star > res.i_star_threshold;
        } catch (const InsufficientData&) {
            res.i_star = kNan;
            res.i_star_threshold = kNan;
        }
        results.push_back(res);
    }
    return results;
}

double pearson_correlation(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw InvalidInput("pearson_correlation: sequences differ in length");
    if (a.size() < 2) throw InvalidInput("pearson_correlation: need at least 2 points");

    // A constant sequence has zero variance even when its floating-point
    // mean does not round-trip, so detect constancy exactly.
    bool a_constant = true, b_constant = true;
    for (std::size_t i = 1; i < a.size(); ++i) {
        a_constant = a_constant && a[i] == a[0];
        b_constant = b_constant && b[i] == b[0];
    }
    if (a_constant || b_constant)
        throw UndefinedCorrelation("pearson_correlation: zero variance");

    const double n = static_cast<double>(a.size());
    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mean_a += a[i];
        mean_b += b[i];
    }
    mean_a /= n;
    mean_b /= n;

    double var_a = 0.0, var_b = 0.0, cov = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - mean_a;
        const double db = b[i] - mean_b;
        var_a += da * da;
        var_b += db * db;
        cov += da * db;
    }
    if (var_a == 0.0 || var_b == 0.0)
        throw UndefinedCorrelation("pearson_correlation: zero variance");
    return cov / std::sqrt(var_a * var_b);
}

}  // namespace trendirr
