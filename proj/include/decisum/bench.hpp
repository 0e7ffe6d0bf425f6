#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace decisum::bench {

enum class Spacing { Log, Linear };

struct BenchConfig {
    std::vector<std::size_t> n_values{15, 100, 1000};
    std::uint64_t k_max = 100000;
    std::size_t k_samples = 50;
    Spacing spacing = Spacing::Log;
    std::uint64_t seed = 42;
    std::size_t trials = 1;
    /// Explicit K checkpoints; when non-empty they replace the generated grid.
    std::vector<std::uint64_t> k_checkpoints;
    /// Enumeration steps run on each instance before timing starts.
    std::uint64_t warmup_steps = 1000;
    /// Timed enumerations per trial; each checkpoint keeps the fastest.
    std::size_t timing_repeats = 3;
};

struct BenchRecord {
    std::size_t n = 0;
    std::uint64_t k = 0;
    std::size_t pending_size = 0;
    double elapsed_s = 0.0; ///< cumulative process CPU time to reach k
    std::size_t trial = 0;
    std::uint64_t seed = 0;
};

void validate(const BenchConfig& config);

/// K grid for one n: k_max is capped at 2^n, duplicates dropped.
std::vector<std::uint64_t> checkpoints(const BenchConfig& config, std::size_t n);

/// Samples standard-uniform pairs per (n, trial) and records pending size and
/// process time at every checkpoint. Deterministic in everything but time.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

struct PolynomialFit {
    std::vector<double> coefficients; ///< constant term first
    double r_squared = 0.0;
};

/// Ordinary least squares polynomial fit. Needs degree + 1 distinct x values.
PolynomialFit fit_polynomial(std::span<const double> xs, std::span<const double> ys, std::size_t degree);

struct QuadraticFit {
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;
    double r_squared = 0.0;
};

/// Degree-2 fit of elapsed time against K for records of a single n.
QuadraticFit fit_quadratic(std::span<const BenchRecord> records);

/// Current process CPU time in seconds.
double process_time_s();

} // namespace decisum::bench
