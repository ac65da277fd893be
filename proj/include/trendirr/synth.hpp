#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "trendirr/error.hpp"
#include "trendirr/rng.hpp"

namespace trendirr {

enum class ProcessKind { random_walk, ar2, nar2 };

/// Reading of the integer time index t in the nar2 sinusoidal driver.
/// `integer` is the literal reading, under which sin(4*pi*t) vanishes at
/// every step; `scaled` advances the argument by t*0.01 so the driver
/// actually oscillates.
enum class NarTimeMode { integer, scaled };

inline constexpr double kNarTimeDelta = 0.01;
inline constexpr std::int64_t kSynthBurnIn = 1000;  // ar2/nar2 transient discard

struct ProcessSpec {
    ProcessKind kind = ProcessKind::random_walk;
    double p = 0.6;                // random_walk right-step probability
    std::int64_t length = 0;       // sample count
    std::uint64_t seed = 0;
    NarTimeMode nar_time_mode = NarTimeMode::integer;
};

/// Lattice walk from the origin: X_{t+1} = X_t + 1 with probability p, else -1.
std::vector<std::int64_t> gen_random_walk(double p, std::int64_t n, std::uint64_t seed);

/// x_{t+2} = 0.7 x_{t+1} + 0.2 x_t + noise_t, started at zero; the recursion
/// runs burn_in extra steps first and those samples are dropped.
template <typename NoiseFn>
std::vector<double> ar2_with_noise(std::int64_t n, NoiseFn&& noise,
                                   std::int64_t burn_in = kSynthBurnIn) {
    if (n < 2) throw InvalidInput("ar2: n must be >= 2");
    const std::int64_t total = n + burn_in;
    std::vector<double> x(static_cast<std::size_t>(total), 0.0);
    for (std::int64_t t = 0; t + 2 < total; ++t)
        x[t + 2] = 0.7 * x[t + 1] + 0.2 * x[t] + noise();
    x.erase(x.begin(), x.begin() + burn_in);
    return x;
}

/// Bivariate nonlinear recursion collapsed to u_t = x_t^2 + y_t^2:
///   x_{t+2} = 0.5 x_{t+1} - 0.3 x_t + 0.1 y_t + 0.1 x_t^2 + 0.4 y_{t+1}^2 + 0.0025 eta_t
///   y_{t+2} = sin(4 pi tau) + sin(6 pi tau) + 0.0025 zeta_t
/// with tau = t (integer mode) or t*0.01 (scaled mode).
template <typename EtaFn, typename ZetaFn>
std::vector<double> nar2_with_noise(std::int64_t n, EtaFn&& eta, ZetaFn&& zeta,
                                    NarTimeMode mode = NarTimeMode::integer,
                                    std::int64_t burn_in = kSynthBurnIn) {
    if (n < 2) throw InvalidInput("nar2: n must be >= 2");
    constexpr double kPi = 3.14159265358979323846;
    const std::int64_t total = n + burn_in;
    std::vector<double> x(static_cast<std::size_t>(total), 0.0);
    std::vector<double> y(static_cast<std::size_t>(total), 0.0);
    const double dt = mode == NarTimeMode::scaled ? kNarTimeDelta : 1.0;
    for (std::int64_t t = 0; t + 2 < total; ++t) {
        x[t + 2] = 0.5 * x[t + 1] - 0.3 * x[t] + 0.1 * y[t] + 0.1 * x[t] * x[t] +
                   0.4 * y[t + 1] * y[t + 1] + 0.0025 * eta();
        const double tau = static_cast<double>(t) * dt;
        y[t + 2] = std::sin(4.0 * kPi * tau) + std::sin(6.0 * kPi * tau) + 0.0025 * zeta();
        if (!std::isfinite(x[t + 2]) || std::abs(x[t + 2]) > 1e12)
            throw GenerationError("nar2: recursion diverged at step " + std::to_string(t + 2));
    }
    std::vector<double> u(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) {
        const double xv = x[burn_in + t];
        const double yv = y[burn_in + t];
        u[t] = xv * xv + yv * yv;
    }
    return u;
}

/// ar2 with standard-normal innovations.
std::vector<double> gen_ar2(std::int64_t n, std::uint64_t seed);

/// nar2 with iid Laplace(0, 1) noises.
std::vector<double> gen_nar2(std::int64_t n, std::uint64_t seed,
                             NarTimeMode mode = NarTimeMode::integer);

/// One Laplace(mu, beta) draw from the stream.
double sample_laplace(double mu, double beta, Rng& rng);

/// Dispatch on ProcessSpec; walk positions are returned as doubles.
std::vector<double> generate(const ProcessSpec& spec);

const char* to_string(ProcessKind kind);
const char* to_string(NarTimeMode mode);

}  // namespace trendirr
