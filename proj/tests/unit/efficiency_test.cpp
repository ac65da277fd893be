#include <doctest.h>

#include <cmath>
#include <vector>

#include "test_helpers.hpp"
#include "trendirr/efficiency.hpp"
#include "trendirr/error.hpp"
#include "trendirr/rng.hpp"

using namespace trendirr;

namespace {

BinarySeries bits_of(std::vector<std::uint8_t> v) { return BinarySeries{std::move(v)}; }

BinarySeries alternating(std::size_t n, std::uint8_t first = 0) {
    BinarySeries b;
    b.bits.resize(n);
    for (std::size_t i = 0; i < n; ++i) b.bits[i] = (i % 2 == 0) ? first : 1 - first;
    return b;
}

BinarySeries repeated(std::size_t n, std::uint8_t value) {
    BinarySeries b;
    b.bits.assign(n, value);
    return b;
}

}  // namespace

TEST_CASE("block entropy of a constant sequence is zero") {
    for (const int l : {1, 2, 3, 5}) {
        CHECK(block_entropy(repeated(64, 0), l) == 0.0);
        CHECK(block_entropy(repeated(64, 1), l) == 0.0);
    }
}

TEST_CASE("block entropy of an alternating sequence at l = 2 is ln 2") {
    // Odd length gives equal 01/10 counts, so the value is exact.
    CHECK(block_entropy(alternating(11), 2) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("block entropy of fair iid bits approaches l * ln 2") {
    Rng rng(12);
    BinarySeries b;
    b.bits.resize(1000000);
    for (auto& bit : b.bits) bit = rng.uniform01() < 0.5 ? 1 : 0;
    CHECK(block_entropy(b, 3) == doctest::Approx(3.0 * std::log(2.0)).epsilon(0.01 / 2.0));
    CHECK(std::abs(block_entropy(b, 3) - 3.0 * std::log(2.0)) < 0.01);
}

TEST_CASE("block counting validates input") {
    CHECK_THROWS_AS(block_entropy(repeated(4, 0), 0), InvalidInput);
    CHECK_THROWS_AS(block_entropy(repeated(4, 0), 25), InvalidInput);
    CHECK_THROWS_AS(block_entropy(repeated(4, 0), 5), InsufficientData);
    CHECK_THROWS_AS(block_entropy(bits_of({0, 1, 2}), 2), InvalidInput);
}

TEST_CASE("count_blocks indexes patterns by packed value") {
    const BlockEntropyTable t = count_blocks(bits_of({0, 1, 1, 0}), 2);
    REQUIRE(t.counts.size() == 4);
    CHECK(t.total == 3);
    CHECK(t.counts[0b01] == 1);
    CHECK(t.counts[0b11] == 1);
    CHECK(t.counts[0b10] == 1);
    CHECK(t.counts[0b00] == 0);
}

TEST_CASE("inefficiency of predictable sequences is ln 2") {
    // Alternating: H^2 = H^3 = ln 2 in the limit; at finite odd length the
    // value sits within O(1/n^2) of ln 2.
    CHECK(inefficiency_index(alternating(101)).i_star ==
          doctest::Approx(std::log(2.0)).epsilon(1e-3));
    CHECK(std::abs(inefficiency_index(alternating(1000001)).i_star - std::log(2.0)) <= 1e-12);

    // Constant: H^2 = H^3 = 0 exactly.
    CHECK(inefficiency_index(repeated(64, 1)).i_star == std::log(2.0));
}

TEST_CASE("inefficiency of fair iid bits is near zero") {
    Rng rng(34);
    BinarySeries b;
    b.bits.resize(1000000);
    for (auto& bit : b.bits) bit = rng.uniform01() < 0.5 ? 1 : 0;
    const InefficiencyResult r = inefficiency_index(b);
    CHECK(r.block_length == 2);
    CHECK(r.n_blocks == b.bits.size() - 2);
    CHECK(std::abs(r.i_star) < 1e-4);
}

TEST_CASE("inefficiency needs l + 1 bits") {
    CHECK_THROWS_AS(inefficiency_index(bits_of({0, 1}), 2), InsufficientData);
}

TEST_CASE("inefficiency stays within [0, ln 2] on random inputs") {
    Rng rng(56);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 100 + rng.below(2000);
        const double bias = 0.2 + 0.6 * rng.uniform01();
        BinarySeries b;
        b.bits.resize(n);
        for (auto& bit : b.bits) bit = rng.uniform01() < bias ? 1 : 0;
        const double v = inefficiency_index(b).i_star;
        CHECK(v >= 0.0);
        CHECK(v <= std::log(2.0) + 1e-12);
    }
}

TEST_CASE("inefficiency is exactly invariant under bit flips") {
    Rng rng(78);
    for (int rep = 0; rep < 50; ++rep) {
        BinarySeries b;
        b.bits.resize(50 + rng.below(500));
        for (auto& bit : b.bits) bit = rng.uniform01() < 0.4 ? 1 : 0;
        BinarySeries flipped;
        flipped.bits.resize(b.bits.size());
        for (std::size_t i = 0; i < b.bits.size(); ++i) flipped.bits[i] = 1 - b.bits[i];
        CHECK(inefficiency_index(b).i_star == inefficiency_index(flipped).i_star);
    }
}

TEST_CASE("block entropy matches the naive substring oracle exhaustively") {
    // Every binary string of length <= 10; the acceptance suite extends to 16.
    for (int n = 1; n <= 10; ++n) {
        for (std::uint32_t pattern = 0; pattern < (1u << n); ++pattern) {
            BinarySeries b;
            b.bits.resize(n);
            for (int i = 0; i < n; ++i) b.bits[i] = (pattern >> i) & 1;
            for (const int l : {1, 2, 3}) {
                if (n < l) continue;
                CHECK(block_entropy(b, l) ==
                      doctest::Approx(testutil::naive_block_entropy(b.bits, l)).epsilon(1e-12));
            }
        }
    }
}
