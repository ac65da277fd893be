#pragma once

#include <cstddef>
#include <span>

#include "trendirr/trend.hpp"

namespace trendirr {

/// Trend irreversibility index with the sample counts behind it.
struct IrreversibilityResult {
    double i_t = 0.0;          // D_KL(P_up || P_down), nats, >= 0
    std::size_t n_up = 0;      // uptrend duration samples
    std::size_t n_down = 0;    // downtrend duration samples
    bool smoothed = false;
};

inline constexpr double kDefaultSmoothing = 0.5;

/// Kullback-Leibler divergence D_KL(p || q) in nats.
///
/// With smoothing > 0, the pseudo-count is added to both count vectors over
/// the union support and the masses renormalized, so the result is always
/// finite. With smoothing == 0 this is the plug-in estimator; it throws
/// DivergenceUndefined when p has mass where q has none.
double kl_divergence(const EmpiricalDistribution& p, const EmpiricalDistribution& q,
                     double smoothing = kDefaultSmoothing);

/// Trend irreversibility index of a series: segments it into monotone runs,
/// estimates the uptrend and downtrend duration distributions, and returns
/// D_KL(P_up || P_down). Throws InsufficientData when the series has no
/// uptrend or no downtrend.
IrreversibilityResult trend_irreversibility(std::span<const double> series,
                                            double smoothing = kDefaultSmoothing);

/// Closed forms for the lattice random walk with right-step probability p.
double rw_kl_up_down(double p);         // (2p-1)/(1-p) * ln(p/(1-p)) = e_p/(1-p)
double rw_kl_down_up(double p);         // (1-2p)/p * ln((1-p)/p)     = e_p/p
double rw_entropy_production(double p); // (2p-1) * ln(p/(1-p))

}  // namespace trendirr
