#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trendirr {

/// One oracle-suite check: observed vs expected with the pass verdict.
/// Informational rows report a value without gating the exit code.
struct ValidateCheck {
    std::string name;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool informational = false;
    std::string note;
};

/// Random-walk sweep: empirical trend irreversibility against the closed
/// form (2p-1)/(1-p)*ln(p/(1-p)) at N = 1e5 for p in {0.5, 0.55, 0.6, 0.7, 0.9}.
std::vector<ValidateCheck> validate_random_walk(std::uint64_t seed);

/// Reversible ar2 sweep: the index should stay below the surrogate threshold
/// across N in {1e3, 1e4, 1e5, 1e6}.
std::vector<ValidateCheck> validate_ar(std::uint64_t seed);

/// Irreversible nar2 sweep over the same N grid: the index should exceed the
/// threshold for N >= 1e4 in scaled time mode; integer-mode rows are reported
/// without gating.
std::vector<ValidateCheck> validate_nar(std::uint64_t seed);

std::vector<ValidateCheck> validate_all(std::uint64_t seed);

bool all_passed(const std::vector<ValidateCheck>& checks);

}  // namespace trendirr
