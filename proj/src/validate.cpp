#include "trendirr/validate.hpp"

#include <algorithm>
#include <cmath>

#include "trendirr/divergence.hpp"
#include "trendirr/rng.hpp"
#include "trendirr/surrogate.hpp"
#include "trendirr/synth.hpp"

namespace trendirr {

namespace {

constexpr std::int64_t kWalkLength = 100000;
const std::int64_t kSweepLengths[] = {1000, 10000, 100000, 1000000};

std::string n_label(std::int64_t n) { return "N=" + std::to_string(n); }

}  // namespace

std::vector<ValidateCheck> validate_random_walk(std::uint64_t seed) {
    std::vector<ValidateCheck> checks;
    const double probabilities[] = {0.5, 0.55, 0.6, 0.7, 0.9};
    for (std::size_t i = 0; i < std::size(probabilities); ++i) {
        const double p = probabilities[i];
        const std::vector<std::int64_t> walk =
            gen_random_walk(p, kWalkLength, derive_seed(seed, i));
        const std::vector<double> series(walk.begin(), walk.end());
        const double estimate = trend_irreversibility(series).i_t;
        const double closed = p == 0.5 ? 0.0 : rw_kl_up_down(p);
        const double tol = std::max(0.05 * closed, 0.01);
        ValidateCheck c;
        c.name = "random_walk closed form, p=" + std::to_string(p).substr(0, 4);
        c.observed = estimate;
        c.expected = closed;
        c.tolerance = tol;
        c.pass = std::abs(estimate - closed) <= tol;
        if (p >= 0.7)
            c.note = "plug-in estimate saturates below the closed form at strong drift";
        checks.push_back(std::move(c));
    }
    return checks;
}

std::vector<ValidateCheck> validate_ar(std::uint64_t seed) {
    std::vector<ValidateCheck> checks;
    for (std::size_t i = 0; i < std::size(kSweepLengths); ++i) {
        const std::int64_t n = kSweepLengths[i];
        const std::vector<double> x = gen_ar2(n, derive_seed(seed, 100 + i));
        const double i_t = trend_irreversibility(x).i_t;
        const SurrogateEnsembleResult ens = significance_test(
            x, Statistic::trend_irreversibility, 100, 0.05, derive_seed(seed, 200 + i));
        ValidateCheck c;
        c.name = "ar2 not significant, " + n_label(n);
        c.observed = i_t;
        c.expected = ens.threshold_95;
        c.pass = i_t <= ens.threshold_95;
        c.note = "pass iff observed <= threshold";
        checks.push_back(std::move(c));
    }
    return checks;
}

std::vector<ValidateCheck> validate_nar(std::uint64_t seed) {
    std::vector<ValidateCheck> checks;
    for (const NarTimeMode mode : {NarTimeMode::scaled, NarTimeMode::integer}) {
        for (std::size_t i = 0; i < std::size(kSweepLengths); ++i) {
            const std::int64_t n = kSweepLengths[i];
            const std::vector<double> u = gen_nar2(n, derive_seed(seed, 300 + i), mode);
            const double i_t = trend_irreversibility(u).i_t;
            const SurrogateEnsembleResult ens = significance_test(
                u, Statistic::trend_irreversibility, 100, 0.05,
                derive_seed(seed, 400 + 10 * static_cast<std::size_t>(mode) + i));
            ValidateCheck c;
            c.name = std::string("nar2 significant, mode=") + to_string(mode) + ", " +
                     n_label(n);
            c.observed = i_t;
            c.expected = ens.threshold_95;
            c.pass = i_t > ens.threshold_95;
            c.note = "pass iff observed > threshold";
            // The assertion applies to the scaled mode at N >= 1e4; everything
            // else is reported for comparison.
            c.informational = mode == NarTimeMode::integer || n < 10000;
            checks.push_back(std::move(c));
        }
    }
    return checks;
}

std::vector<ValidateCheck> validate_all(std::uint64_t seed) {
    std::vector<ValidateCheck> checks = validate_random_walk(seed);
    std::vector<ValidateCheck> ar = validate_ar(seed);
    std::vector<ValidateCheck> nar = validate_nar(seed);
    checks.insert(checks.end(), ar.begin(), ar.end());
    checks.insert(checks.end(), nar.begin(), nar.end());
    return checks;
}

bool all_passed(const std::vector<ValidateCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ValidateCheck& c) { return c.pass || c.informational; });
}

}  // namespace trendirr
