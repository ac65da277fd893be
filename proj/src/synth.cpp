#include "trendirr/synth.hpp"

namespace trendirr {

std::vector<std::int64_t> gen_random_walk(double p, std::int64_t n, std::uint64_t seed) {
    if (!(p > 0.0) || !(p < 1.0))
        throw InvalidInput("gen_random_walk: p must lie in (0, 1)");
    if (n < 2) throw InvalidInput("gen_random_walk: n must be >= 2");

    std::vector<std::int64_t> x(static_cast<std::size_t>(n));
    x[0] = 0;
    Rng rng(seed);
    for (std::int64_t t = 1; t < n; ++t)
        x[t] = x[t - 1] + (rng.uniform01() < p ? 1 : -1);
    return x;
}

std::vector<double> gen_ar2(std::int64_t n, std::uint64_t seed) {
    Rng rng(seed);
    return ar2_with_noise(n, [&rng] { return rng.normal(); });
}

std::vector<double> gen_nar2(std::int64_t n, std::uint64_t seed, NarTimeMode mode) {
    Rng rng(seed);
    return nar2_with_noise(
        n, [&rng] { return rng.laplace(0.0, 1.0); }, [&rng] { return rng.laplace(0.0, 1.0); },
        mode);
}

double sample_laplace(double mu, double beta, Rng& rng) { return rng.laplace(mu, beta); }

std::vector<double> generate(const ProcessSpec& spec) {
    switch (spec.kind) {
        case ProcessKind::random_walk: {
            const std::vector<std::int64_t> walk =
                gen_random_walk(spec.p, spec.length, spec.seed);
            return std::vector<double>(walk.begin(), walk.end());
        }
        case ProcessKind::ar2:
            return gen_ar2(spec.length, spec.seed);
        case ProcessKind::nar2:
            return gen_nar2(spec.length, spec.seed, spec.nar_time_mode);
    }
    throw InvalidInput("generate: unknown process kind");
}

const char* to_string(ProcessKind kind) {
    switch (kind) {
        case ProcessKind::random_walk: return "random_walk";
        case ProcessKind::ar2: return "ar2";
        case ProcessKind::nar2: return "nar2";
    }
    return "unknown";
}

const char* to_string(NarTimeMode mode) {
    return mode == NarTimeMode::scaled ? "scaled" : "integer";
}

}  // namespace trendirr
