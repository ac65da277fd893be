#include "trendirr/divergence.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "trendirr/error.hpp"

namespace trendirr {

namespace {

void check_distribution(const EmpiricalDistribution& d, const char* name) {
    if (d.support.size() != d.mass.size() || d.support.empty())
        throw InvalidInput(std::string("kl_divergence: malformed distribution ") + name);
    double total = 0.0;
    for (std::size_t i = 0; i < d.support.size(); ++i) {
        if (d.support[i] < 1)
            throw InvalidInput(std::string("kl_divergence: non-positive support in ") + name);
        if (i > 0 && d.support[i] <= d.support[i - 1])
            throw InvalidInput(std::string("kl_divergence: unsorted support in ") + name);
        if (!(d.mass[i] > 0.0) || !std::isfinite(d.mass[i]))
            throw InvalidInput(std::string("kl_divergence: non-positive mass in ") + name);
        total += d.mass[i];
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw InvalidInput(std::string("kl_divergence: masses do not sum to 1 in ") + name);
}

double count_of(const EmpiricalDistribution& d, std::size_t i) {
    return std::round(d.mass[i] * static_cast<double>(d.n_samples));
}

}  // namespace

double kl_divergence(const EmpiricalDistribution& p, const EmpiricalDistribution& q,
                     double smoothing) {
    check_distribution(p, "p");
    check_distribution(q, "q");
    if (!(smoothing >= 0.0) || !std::isfinite(smoothing))
        throw InvalidInput("kl_divergence: smoothing must be a finite value >= 0");

    if (smoothing == 0.0) {
        // Plug-in estimator over p's support; q must cover it.
        double sum = 0.0;
        std::size_t j = 0;
        for (std::size_t i = 0; i < p.support.size(); ++i) {
            while (j < q.support.size() && q.support[j] < p.support[i]) ++j;
            if (j == q.support.size() || q.support[j] != p.support[i])
                throw DivergenceUndefined(
                    "kl_divergence: p has mass at duration " + std::to_string(p.support[i]) +
                    " where q has none (smoothing = 0)");
            sum += p.mass[i] * std::log(p.mass[i] / q.mass[j]);
        }
        return sum < 0.0 && sum > -1e-12 ? 0.0 : sum;
    }

    if (p.n_samples == 0 || q.n_samples == 0)
        throw InvalidInput("kl_divergence: smoothing requires count-backed distributions");

    // Union support, pseudo-count added to both count vectors, renormalized.
    std::vector<double> cp, cq;
    std::size_t i = 0, j = 0;
    while (i < p.support.size() || j < q.support.size()) {
        const bool take_p = j == q.support.size() ||
                            (i < p.support.size() && p.support[i] <= q.support[j]);
        const bool take_q = i == p.support.size() ||
                            (j < q.support.size() && q.support[j] <= p.support[i]);
        cp.push_back(take_p ? count_of(p, i) : 0.0);
        cq.push_back(take_q ? count_of(q, j) : 0.0);
        if (take_p) ++i;
        if (take_q) ++j;
    }

    const double union_size = static_cast<double>(cp.size());
    const double denom_p = static_cast<double>(p.n_samples) + smoothing * union_size;
    const double denom_q = static_cast<double>(q.n_samples) + smoothing * union_size;
    double sum = 0.0;
    for (std::size_t k = 0; k < cp.size(); ++k) {
        const double pm = (cp[k] + smoothing) / denom_p;
        const double qm = (cq[k] + smoothing) / denom_q;
        sum += pm * std::log(pm / qm);
    }
    return sum < 0.0 && sum > -1e-12 ? 0.0 : sum;
}

IrreversibilityResult trend_irreversibility(std::span<const double> series, double smoothing) {
    const TrendDurations d = extract_trend_durations(series);
    if (d.up.empty() || d.down.empty())
        throw InsufficientData("trend_irreversibility: series has no uptrend or no downtrend");
    const EmpiricalDistribution p_up = empirical_distribution(d.up);
    const EmpiricalDistribution p_down = empirical_distribution(d.down);
    IrreversibilityResult out;
    out.i_t = kl_divergence(p_up, p_down, smoothing);
    out.n_up = d.up.size();
    out.n_down = d.down.size();
    out.smoothed = smoothing > 0.0;
    return out;
}

namespace {

void check_probability(double p) {
    if (!(p > 0.0) || !(p < 1.0))
        throw InvalidInput("random-walk closed form: p must lie in (0, 1)");
}

}  // namespace

double rw_entropy_production(double p) {
    check_probability(p);
    return (2.0 * p - 1.0) * std::log(p / (1.0 - p));
}

double rw_kl_up_down(double p) {
    check_probability(p);
    return (2.0 * p - 1.0) / (1.0 - p) * std::log(p / (1.0 - p));
}

double rw_kl_down_up(double p) {
    check_probability(p);
    return (1.0 - 2.0 * p) / p * std::log((1.0 - p) / p);
}

}  // namespace trendirr
