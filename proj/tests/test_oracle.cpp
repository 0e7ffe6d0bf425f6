#include "decisum/enumerator.hpp"
#include "decisum/errors.hpp"
#include "decisum/oracle.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using decisum::Direction;
namespace oracle = decisum::oracle;

TEST_CASE("oracle enumerates the example exhaustively") {
    const auto all = oracle::brute_force_top_k({{1, 5}, {2, 3}, {0, 4}}, 8);
    std::vector<double> sums;
    for (const auto& r : all) {
        sums.push_back(r.sum);
    }
    CHECK(sums == std::vector<double>{3, 4, 7, 7, 8, 8, 11, 12});
    // ties ordered by selection bits, pair 1 most significant
    CHECK(all[2].selection == decisum::Selection{0, 0, 1});
    CHECK(all[3].selection == decisum::Selection{1, 0, 0});
    CHECK(all.back().rank == 8);
}

TEST_CASE("oracle small cases") {
    const auto two = oracle::brute_force_top_k({{0, 1}}, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].sum == 0.0);
    CHECK(two[1].sum == 1.0);

    std::mt19937_64 rng(1);
    const auto pairs = decisum::testing::uniform_pairs(rng, 10);
    double minima = 0.0;
    for (const auto& p : pairs) {
        minima += std::min(p.first, p.second);
    }
    CHECK(oracle::brute_force_top_k(pairs, 1)[0].sum == doctest::Approx(minima));
    CHECK(oracle::brute_force_top_k(pairs, 5000).size() == 1024);
}

TEST_CASE("oracle guards") {
    CHECK_THROWS_AS(oracle::brute_force_top_k(decisum::PairList(25, {0.0, 1.0}), 1), decisum::TooLarge);
    CHECK_THROWS_AS(oracle::brute_force_top_k({{0, 1}}, 0), decisum::InvalidK);
    CHECK_THROWS_AS(oracle::brute_force_top_k({}, 1), decisum::EmptyInput);
}

TEST_CASE("oracle full ranking is non-decreasing") {
    std::mt19937_64 rng(8);
    const auto pairs = decisum::testing::integer_pairs(rng, 9);
    const auto all = oracle::brute_force_top_k(pairs, 512);
    REQUIRE(all.size() == 512);
    for (std::size_t i = 1; i < all.size(); ++i) {
        CHECK(all[i - 1].sum <= all[i].sum);
    }
}

TEST_CASE("oracle and enumerator agree on sum sequences") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const bool integral = trial % 2 == 0;
        const auto pairs = integral ? decisum::testing::integer_pairs(rng, n) : decisum::testing::uniform_pairs(rng, n);
        const auto dir = trial % 3 == 0 ? Direction::Max : Direction::Min;
        const std::uint64_t k = std::min<std::uint64_t>(std::uint64_t{1} << n, 300);
        const auto fast = decisum::top_k(pairs, k, dir);
        const auto slow = oracle::brute_force_top_k(pairs, k, dir);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) {
            if (integral) {
                CHECK(fast[i].sum == slow[i].sum);
            } else {
                CHECK(std::abs(fast[i].sum - slow[i].sum) <= 1e-9 * std::max(1.0, std::abs(slow[i].sum)));
            }
        }
    }
}

TEST_CASE("first match reports the rank in the full ordering") {
    const decisum::PairList conf{{0.1, 0.9}, {0.8, 0.2}, {0.6, 0.4}};
    auto even = [](std::span<const std::uint8_t> bits) {
        int ones = 0;
        for (auto b : bits) {
            ones += b;
        }
        return ones % 2 == 0;
    };
    const auto hit = oracle::brute_force_first_match(conf, Direction::Max, even);
    REQUIRE(hit);
    CHECK(hit->rank == 2);
    CHECK(hit->selection == decisum::Selection{1, 0, 1});
    CHECK(hit->sum == doctest::Approx(2.1));

    const auto none = oracle::brute_force_first_match(conf, Direction::Max, [](auto) { return false; });
    CHECK_FALSE(none);
}
