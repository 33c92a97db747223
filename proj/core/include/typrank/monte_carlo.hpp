#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "typrank/format.hpp"
#include "typrank/solvers.hpp"

namespace typrank {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(long successes, long trials, double z = 1.96);

/// Proportion over the non-rejected trials.
struct ProbEstimate {
    long successes = 0;
    long trials = 0;
    long rejected = 0;
    double p_hat = 0.0;
    Interval ci95;

    long accepted() const noexcept { return trials - rejected; }
    /// Binomial standard error sqrt(p(1-p)/accepted).
    double stderr_() const;
};

ProbEstimate make_estimate(long successes, long trials, long rejected);

/// Tally of real intersection counts over accepted trials.
struct CountDistribution {
    std::vector<int> support;
    std::map<int, long> tallies;
    long trials = 0;
    long rejected = 0;

    long accepted() const noexcept { return trials - rejected; }
    double probability(int count) const;
    double mean() const;
    /// Standard error of the mean count.
    double mean_stderr() const;
};

/// Achievable real counts for a boundary format: integers in [0, degree] with
/// the parity of the degree.
std::vector<int> count_support(int m, int n);

struct RankEstimate {
    Format format;
    long trials = 0;
    long rejected = 0;
    std::map<int, ProbEstimate> ranks;
    std::optional<CountDistribution> counts;

    double rejection_rate() const noexcept {
        return trials == 0 ? 0.0 : static_cast<double>(rejected) / static_cast<double>(trials);
    }
};

/// Runs fn(i) for i in [0, count) on `workers` threads and returns the results
/// in index order. Work is handed out in fixed contiguous blocks, so the
/// result never depends on the worker count.
template <typename Fn>
auto parallel_trials(long count, int workers, Fn fn) -> std::vector<decltype(fn(0L))> {
    using Result = decltype(fn(0L));
    std::vector<Result> results(static_cast<std::size_t>(std::max(0L, count)));
    workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max(1L, count))));
    if (workers == 1) {
        for (long i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = fn(i);
        return results;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const long block = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                const long begin = w * block;
                const long end = std::min(count, begin + block);
                for (long i = begin; i < end; ++i) results[static_cast<std::size_t>(i)] = fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

/// Classifies `trials` Gaussian tensors; trial i draws from stream i of `seed`.
/// Ambiguous or degenerate trials are counted in `rejected`. The count
/// distribution is filled for Boundary formats.
RankEstimate monte_carlo_rank(const Format& format, long trials, std::uint64_t seed,
                              int workers = 1, const SolverTolerances& tol = {});

/// Worker count from TYPRANK_WORKERS, else the hardware concurrency.
int default_worker_count();

} // namespace typrank
