#include "decisum/bench.hpp"
#include "decisum/errors.hpp"

#include <doctest.h>

#include <cmath>

namespace bench = decisum::bench;

TEST_CASE("quadratic fit recovers a generating polynomial") {
    std::vector<bench::BenchRecord> records;
    for (std::uint64_t k : {10, 100, 1000, 5000, 20000, 100000}) {
        const double kd = static_cast<double>(k);
        records.push_back({100, k, 0, 2e-8 * kd * kd, 0, 0});
    }
    const auto fit = bench::fit_quadratic(records);
    CHECK(fit.c2 == doctest::Approx(2e-8).epsilon(1e-9));
    CHECK(std::abs(fit.c1) < 1e-12);
    CHECK(std::abs(fit.c0) < 1e-9);
    CHECK(fit.r_squared == doctest::Approx(1.0));
}

TEST_CASE("constant data fits with zero curvature") {
    std::vector<bench::BenchRecord> records;
    for (std::uint64_t k : {1, 2, 3, 4, 8}) {
        records.push_back({15, k, 0, 0.25, 0, 0});
    }
    const auto fit = bench::fit_quadratic(records);
    CHECK(std::abs(fit.c2) < 1e-12);
    CHECK(fit.c0 == doctest::Approx(0.25));
    CHECK(fit.r_squared == doctest::Approx(1.0));
}

TEST_CASE("degenerate fits are rejected") {
    std::vector<bench::BenchRecord> records{{15, 5, 0, 0.1, 0, 0}, {15, 5, 0, 0.2, 1, 0}, {15, 7, 0, 0.3, 0, 0}};
    CHECK_THROWS_AS(bench::fit_quadratic(records), decisum::DegenerateFit);
    const std::vector<double> xs{1, 2, 3};
    const std::vector<double> ys{2, 4, 6};
    const auto line = bench::fit_polynomial(xs, ys, 1);
    CHECK(line.coefficients[1] == doctest::Approx(2.0));
    CHECK(line.r_squared == doctest::Approx(1.0));
}

TEST_CASE("checkpoint grid") {
    bench::BenchConfig config;
    config.k_max = 100000;
    config.k_samples = 50;
    const auto grid15 = bench::checkpoints(config, 15);
    CHECK(grid15.front() == 1);
    CHECK(grid15.back() == 32768);
    const auto grid100 = bench::checkpoints(config, 100);
    CHECK(grid100.back() == 100000);
    CHECK(grid100.size() <= 50);
    for (std::size_t i = 1; i < grid100.size(); ++i) {
        CHECK(grid100[i - 1] < grid100[i]);
    }
    config.spacing = bench::Spacing::Linear;
    config.k_samples = 5;
    config.k_max = 9;
    CHECK(bench::checkpoints(config, 100) == std::vector<std::uint64_t>{1, 3, 5, 7, 9});

    config.k_checkpoints = {50, 10, 10};
    CHECK(bench::checkpoints(config, 100) == std::vector<std::uint64_t>{10, 50});
}

TEST_CASE("bench config validation") {
    bench::BenchConfig config;
    config.k_samples = 1;
    CHECK_THROWS_AS(bench::validate(config), decisum::InvalidK);
    config.k_samples = 10;
    config.k_max = 5;
    CHECK_THROWS_AS(bench::validate(config), decisum::InvalidK);
    config.k_max = 100;
    config.timing_repeats = 0;
    CHECK_THROWS_AS(bench::validate(config), decisum::InvalidK);
    config.timing_repeats = 1;
    config.n_values = {0};
    CHECK_THROWS_AS(bench::validate(config), decisum::EmptyInput);
}

TEST_CASE("bench records are deterministic and bounded") {
    bench::BenchConfig config;
    config.n_values = {8, 30};
    config.k_max = 2000;
    config.k_samples = 10;
    config.trials = 2;
    config.warmup_steps = 10;
    const auto a = bench::run_bench(config);
    const auto b = bench::run_bench(config);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].n == b[i].n);
        CHECK(a[i].k == b[i].k);
        CHECK(a[i].pending_size == b[i].pending_size);
        CHECK(a[i].seed == 42);
        CHECK(a[i].pending_size <= a[i].k * ((a[i].n + 1) / 2));
        if (i > 0 && a[i].n == a[i - 1].n && a[i].trial == a[i - 1].trial) {
            CHECK(a[i].elapsed_s >= a[i - 1].elapsed_s);
        }
    }
    // n = 8 runs to exhaustion at 256
    CHECK(a.front().n == 8);
    bool saw_exhausted = false;
    for (const auto& r : a) {
        if (r.n == 8 && r.k == 256) {
            CHECK(r.pending_size == 0);
            saw_exhausted = true;
        }
    }
    CHECK(saw_exhausted);
}
