#pragma once

#include <tourney/error.hpp>
#include <tourney/generate.hpp>
#include <tourney/sweep.hpp>
#include <tourney/teq.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

namespace tourney {

struct BenchConfig {
    std::vector<std::size_t> sizes;
    std::size_t samples = 20;
    std::uint64_t seed = kDefaultSeed;
    const std::atomic<bool>* cancel = nullptr;
};

struct BenchRow {
    std::size_t n = 0;
    std::string method;
    std::size_t samples = 0;
    double mean_ms = 0;
    double median_ms = 0;
    double mean_calls = 0;
    double median_calls = 0;
    double mean_memoized = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    /// Instances on which the heuristic and the exact recursion selected different sets.
    std::size_t disagreements = 0;
};

namespace detail {

inline double median_of(std::vector<double> v)
{
    if (v.empty()) {
        return 0;
    }
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : (v[mid - 1] + v[mid]) / 2;
}

inline double mean_of(const std::vector<double>& v)
{
    return v.empty() ? 0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

struct Samples {
    std::vector<double> ms, calls, memoized;

    BenchRow row(std::size_t n, const char* method) const
    {
        return {n, method, ms.size(), mean_of(ms), median_of(ms), mean_of(calls), median_of(calls), mean_of(memoized)};
    }
};

} // namespace detail

/// Times the exact recursion against the heuristic on seeded random tournaments.
inline BenchReport run_bench(const BenchConfig& config)
{
    if (config.sizes.empty() || config.samples == 0) {
        throw InputError("bench needs at least one size and one sample");
    }
    BenchReport report;
    for (std::size_t n : config.sizes) {
        if (n < 1) {
            throw InputError("bench sizes must be positive");
        }
        detail::Samples exact, heuristic;
        for (std::size_t s = 0; s < config.samples; ++s) {
            const Tournament t = random_tournament(n, derive_seed(config.seed, n, s));
            TeqOptions options;
            options.cancel = config.cancel;

            auto t0 = std::chrono::steady_clock::now();
            TeqSolver exact_solver(t, options);
            const AlternativeSet exact_set = exact_solver.exact(t.all());
            auto t1 = std::chrono::steady_clock::now();
            TeqSolver heuristic_solver(t, options);
            const AlternativeSet heuristic_set = heuristic_solver.heuristic(t.all());
            auto t2 = std::chrono::steady_clock::now();

            exact.ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
            exact.calls.push_back(static_cast<double>(exact_solver.stats().recursive_calls));
            exact.memoized.push_back(static_cast<double>(exact_solver.stats().memoized_subsets));
            heuristic.ms.push_back(std::chrono::duration<double, std::milli>(t2 - t1).count());
            heuristic.calls.push_back(static_cast<double>(heuristic_solver.stats().recursive_calls));
            heuristic.memoized.push_back(static_cast<double>(heuristic_solver.stats().memoized_subsets));
            if (!(exact_set == heuristic_set)) {
                ++report.disagreements;
            }
        }
        report.rows.push_back(exact.row(n, "teq-exact"));
        report.rows.push_back(heuristic.row(n, "teq-heuristic"));
    }
    return report;
}

inline std::string format_bench(const BenchReport& report)
{
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "%4s  %-13s  %7s  %12s  %12s  %12s  %12s  %12s\n", "n", "method", "samples",
                  "mean_ms", "median_ms", "mean_calls", "median_calls", "mean_memo");
    out += line;
    for (const auto& r : report.rows) {
        std::snprintf(line, sizeof line, "%4zu  %-13s  %7zu  %12.3f  %12.3f  %12.1f  %12.1f  %12.1f\n", r.n,
                      r.method.c_str(), r.samples, r.mean_ms, r.median_ms, r.mean_calls, r.median_calls,
                      r.mean_memoized);
        out += line;
    }
    out += "heuristic/exact disagreements: " + std::to_string(report.disagreements) + "\n";
    return out;
}

} // namespace tourney
