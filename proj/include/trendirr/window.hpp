#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trendirr/series.hpp"

namespace trendirr {

/// Sliding-window settings. Defaults are 91 days of minutes per window,
/// a 10-day step, and 100 shuffle surrogates per window at alpha = 0.05.
struct WindowConfig {
    std::int64_t window_minutes = 131040;
    std::int64_t step_minutes = 14400;
    double alpha = 0.05;
    std::size_t n_surrogates = 100;
    int block_l = 2;
    double smoothing = 0.5;
    std::uint64_t seed = 0;
};

/// Both indices for one window with their surrogate thresholds. An index the
/// window cannot define (no uptrends after a degenerate slice) is NaN with
/// the significance flag false.
struct WindowResult {
    std::int64_t window_start = 0;  // timestamp of the first return in the window
    double i_t = 0.0;
    double i_t_threshold = 0.0;
    double i_star = 0.0;
    double i_star_threshold = 0.0;
    bool i_t_significant = false;
    bool i_star_significant = false;
};

/// Windows at offsets 0, step, 2*step, ...; a trailing partial window is
/// dropped. Surrogate seeds derive from (seed, window index), so results are
/// identical no matter the evaluation order and earlier windows never change
/// when more data arrives.
std::vector<WindowResult> run_windows(const LogReturnSeries& returns, const WindowConfig& cfg);

/// Sample Pearson correlation coefficient. Throws UndefinedCorrelation when
/// either sequence has zero variance.
double pearson_correlation(std::span<const double> a, std::span<const double> b);

}  // namespace trendirr
