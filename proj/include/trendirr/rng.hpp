#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "trendirr/error.hpp"

namespace trendirr {

// SplitMix64 finalizer, used for seed mixing.
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Seed of the independent sub-stream (seed, index). Streams for different
/// indices never move when more indices are added, so results are identical
/// regardless of evaluation order or parallelism.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(seed) ^ (0x9E3779B97F4A7C15ull * (index + 1)));
}

/// mt19937_64 with hand-rolled variate mappings. The standard distribution
/// adapters are implementation-defined, so we map raw draws ourselves to keep
/// sequences identical across compilers and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform integer on [0, n), rejection sampled so every value is equally likely.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw InvalidInput("Rng::below: n must be positive");
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % n;
        std::uint64_t x = eng_();
        while (x >= limit) x = eng_();
        return x % n;
    }

    /// Standard normal via Box-Muller, caching the spare variate.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * kPi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    /// Laplace(mu, beta) by inverse CDF: x = mu - beta*sign(v)*ln(1-2|v|),
    /// v uniform on (-1/2, 1/2).
    double laplace(double mu, double beta) {
        if (!(beta > 0.0)) throw InvalidInput("laplace: beta must be positive");
        double v = uniform01() - 0.5;
        while (v <= -0.5) v = uniform01() - 0.5;  // uniform01 < 1, so v < +0.5 already
        const double sign = (v > 0.0) ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
        return mu - beta * sign * std::log1p(-2.0 * std::abs(v));
    }

private:
    static constexpr double kPi = 3.14159265358979323846;
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Fisher-Yates shuffle driven by an explicit Rng.
template <typename T>
void shuffle_in_place(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace trendirr
