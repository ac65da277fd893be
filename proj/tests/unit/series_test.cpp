#include <doctest.h>

#include <cmath>
#include <numeric>

#include "trendirr/error.hpp"
#include "trendirr/rng.hpp"
#include "trendirr/series.hpp"

using namespace trendirr;

namespace {

PriceSeries make_prices(std::vector<double> prices) {
    PriceSeries p;
    p.prices = std::move(prices);
    p.timestamps.resize(p.prices.size());
    for (std::size_t i = 0; i < p.timestamps.size(); ++i)
        p.timestamps[i] = 1600000000 + static_cast<std::int64_t>(i) * 60;
    return p;
}

}  // namespace

TEST_CASE("log_returns on a constant price is zero") {
    const LogReturnSeries r = log_returns(make_prices({1.0, 1.0, 1.0}));
    REQUIRE(r.values.size() == 2);
    CHECK(r.values[0] == 0.0);
    CHECK(r.values[1] == 0.0);
    CHECK(r.imputed_mask == std::vector<std::uint8_t>{0, 0});
}

TEST_CASE("log_returns of e-fold growth is 1") {
    const LogReturnSeries r = log_returns(make_prices({1.0, std::exp(1.0)}));
    REQUIRE(r.values.size() == 1);
    CHECK(r.values[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("log_returns hand-computed ratios") {
    const LogReturnSeries r = log_returns(make_prices({100.0, 110.0, 99.0}));
    REQUIRE(r.values.size() == 2);
    CHECK(r.values[0] == doctest::Approx(std::log(1.1)).epsilon(1e-14));
    CHECK(r.values[1] == doctest::Approx(std::log(0.9)).epsilon(1e-14));
    CHECK(r.values[0] == doctest::Approx(0.09531).epsilon(1e-4));
    CHECK(r.values[1] == doctest::Approx(-0.10536).epsilon(1e-4));
}

TEST_CASE("log_returns rejects bad input") {
    CHECK_THROWS_AS(log_returns(make_prices({1.0})), InvalidInput);
    CHECK_THROWS_AS(log_returns(make_prices({1.0, -2.0, 3.0})), InvalidInput);
    CHECK_THROWS_AS(log_returns(make_prices({1.0, 0.0})), InvalidInput);

    PriceSeries bad = make_prices({1.0, 2.0});
    bad.timestamps[1] = bad.timestamps[0];
    CHECK_THROWS_AS(log_returns(bad), InvalidInput);
}

TEST_CASE("cumulative exponential reconstruction recovers prices") {
    Rng rng(7);
    std::vector<double> prices{50.0};
    for (int i = 0; i < 500; ++i)
        prices.push_back(prices.back() * std::exp(0.01 * rng.normal()));
    const LogReturnSeries r = log_returns(make_prices(prices));

    double level = prices[0];
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        level *= std::exp(r.values[i]);
        CHECK(level == doctest::Approx(prices[i + 1]).epsilon(1e-12));
    }
}

TEST_CASE("binarize maps signs elementwise, zero to 0") {
    LogReturnSeries r;
    r.values = {0.1, -0.2, 0.0};
    r.imputed_mask = {0, 0, 0};
    CHECK(binarize(r).bits == std::vector<std::uint8_t>{1, 0, 0});

    r.values = {-1.0, -1.0};
    r.imputed_mask = {0, 0};
    CHECK(binarize(r).bits == std::vector<std::uint8_t>{0, 0});

    r.values = {0.09531, -0.10536, 0.0001};
    r.imputed_mask = {0, 0, 0};
    CHECK(binarize(r).bits == std::vector<std::uint8_t>{1, 0, 1});
}

TEST_CASE("binarize rejects an empty series") {
    CHECK_THROWS_AS(binarize(std::span<const double>{}), InvalidInput);
}

TEST_CASE("binarize commutes with permutations") {
    Rng rng(11);
    std::vector<double> values(200);
    for (auto& v : values) v = rng.normal();

    std::vector<std::size_t> perm(values.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);

    std::vector<double> permuted(values.size());
    for (std::size_t i = 0; i < perm.size(); ++i) permuted[i] = values[perm[i]];

    const BinarySeries direct = binarize(std::span<const double>(permuted));
    const BinarySeries original = binarize(std::span<const double>(values));
    for (std::size_t i = 0; i < perm.size(); ++i)
        CHECK(direct.bits[i] == original.bits[perm[i]]);
}
