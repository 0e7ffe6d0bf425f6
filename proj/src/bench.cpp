#include "decisum/bench.hpp"

#include "decisum/enumerator.hpp"
#include "decisum/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <ctime>
#include <memory>
#include <random>
#include <set>

namespace decisum::bench {

double process_time_s() {
    timespec ts{};
    clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

void validate(const BenchConfig& config) {
    if (config.n_values.empty()) {
        throw InvalidK("bench needs at least one n value");
    }
    for (std::size_t n : config.n_values) {
        if (n == 0) {
            throw EmptyInput("bench n values must be at least 1");
        }
    }
    if (config.k_checkpoints.empty() && (config.k_samples < 2 || config.k_max < config.k_samples)) {
        throw InvalidK("bench requires k_max >= samples >= 2");
    }
    if (config.trials == 0 || config.timing_repeats == 0) {
        throw InvalidK("bench requires at least one trial and one timed repeat");
    }
}

std::vector<std::uint64_t> checkpoints(const BenchConfig& config, std::size_t n) {
    const std::uint64_t cap = n < 63 ? (std::uint64_t{1} << n) : UINT64_MAX;
    std::set<std::uint64_t> grid;
    if (!config.k_checkpoints.empty()) {
        for (std::uint64_t k : config.k_checkpoints) {
            if (k >= 1) {
                grid.insert(std::min(k, cap));
            }
        }
        return {grid.begin(), grid.end()};
    }

    const std::uint64_t top = std::min(config.k_max, cap);
    const std::size_t samples = config.k_samples;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
        double k = 0.0;
        if (config.spacing == Spacing::Log) {
            k = std::exp(t * std::log(static_cast<double>(top)));
        } else {
            k = 1.0 + t * static_cast<double>(top - 1);
        }
        grid.insert(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::llround(k)), 1, top));
    }
    grid.insert(top);
    return {grid.begin(), grid.end()};
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
    validate(config);
    std::vector<BenchRecord> records;

    for (std::size_t n : config.n_values) {
        const auto grid = checkpoints(config, n);
        for (std::size_t trial = 0; trial < config.trials; ++trial) {
            std::seed_seq seq{config.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial)};
            std::mt19937_64 rng(seq);
            std::uniform_real_distribution<double> uniform(0.0, 1.0);
            PairList pairs(n);
            for (auto& p : pairs) {
                p.first = uniform(rng);
                p.second = uniform(rng);
            }
            auto instance = std::make_shared<const ProblemInstance>(ProblemInstance::normalize(pairs));

            {
                Enumerator warm(instance);
                for (std::uint64_t s = 0; s < config.warmup_steps && warm.advance(); ++s) {
                }
            }

            const std::size_t first = records.size();
            for (std::size_t repeat = 0; repeat < config.timing_repeats; ++repeat) {
                Enumerator it(instance);
                const double start = process_time_s();
                std::uint64_t steps = 0;
                for (std::size_t c = 0; c < grid.size(); ++c) {
                    while (steps < grid[c] && it.advance()) {
                        ++steps;
                    }
                    const double elapsed = process_time_s() - start;
                    if (repeat == 0) {
                        records.push_back({n, grid[c], it.pending_size(), elapsed, trial, config.seed});
                    } else {
                        auto& rec = records[first + c];
                        rec.elapsed_s = std::min(rec.elapsed_s, elapsed);
                    }
                }
            }
        }
    }
    return records;
}

PolynomialFit fit_polynomial(std::span<const double> xs, std::span<const double> ys, std::size_t degree) {
    if (xs.size() != ys.size()) {
        throw LengthMismatch("fit needs as many y values as x values");
    }
    const std::set<double> distinct(xs.begin(), xs.end());
    if (distinct.size() < degree + 1) {
        throw DegenerateFit("degree " + std::to_string(degree) + " fit needs " + std::to_string(degree + 1) +
                            " distinct x values, got " + std::to_string(distinct.size()));
    }

    // scale x to [-1, 1]-ish so the Vandermonde columns stay comparable
    const double x_scale = std::max(std::abs(*distinct.begin()), std::abs(*distinct.rbegin()));
    const Eigen::Index rows = static_cast<Eigen::Index>(xs.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(degree + 1);
    Eigen::MatrixXd vander(rows, cols);
    Eigen::VectorXd y(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const double u = xs[static_cast<std::size_t>(r)] / x_scale;
        double power = 1.0;
        for (Eigen::Index c = 0; c < cols; ++c) {
            vander(r, c) = power;
            power *= u;
        }
        y(r) = ys[static_cast<std::size_t>(r)];
    }
    const Eigen::VectorXd scaled = vander.colPivHouseholderQr().solve(y);

    PolynomialFit fit;
    fit.coefficients.resize(degree + 1);
    double unscale = 1.0;
    for (std::size_t c = 0; c <= degree; ++c) {
        fit.coefficients[c] = scaled(static_cast<Eigen::Index>(c)) / unscale;
        unscale *= x_scale;
    }

    const Eigen::VectorXd residual = y - vander * scaled;
    const double ss_res = residual.squaredNorm();
    const double ss_tot = (y.array() - y.mean()).matrix().squaredNorm();
    if (ss_tot > 0.0) {
        fit.r_squared = 1.0 - ss_res / ss_tot;
    } else {
        // constant data: perfect unless the residual is more than rounding noise
        fit.r_squared = ss_res <= 1e-20 * std::max(1.0, y.squaredNorm()) ? 1.0 : 0.0;
    }
    return fit;
}

QuadraticFit fit_quadratic(std::span<const BenchRecord> records) {
    std::vector<double> ks;
    std::vector<double> ts;
    for (const auto& r : records) {
        ks.push_back(static_cast<double>(r.k));
        ts.push_back(r.elapsed_s);
    }
    const auto fit = fit_polynomial(ks, ts, 2);
    return {fit.coefficients[2], fit.coefficients[1], fit.coefficients[0], fit.r_squared};
}

} // namespace decisum::bench
