#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "typrank/solvers.hpp"
#include "typrank_app/run_record.hpp"

namespace typrank::app {

/// Rejection rate above which a Monte Carlo run counts as a numerical failure.
inline constexpr double kMaxRejectionRate = 0.01;

struct MonteCarloOptions {
    long trials = 10000;
    std::uint64_t seed = 1;
    int workers = 1;
    SolverTolerances tolerances{};
};

/// Throws Error(InvalidArgument) for a malformed format and
/// Error(UnsupportedFormat) before any trial runs.
RunRecord cmd_estimate(const std::string& format, const MonteCarloOptions& options);

struct ExpectationRange {
    int n_min = 0;
    int n_max = 0;
    int step = 1;
};

RunRecord cmd_expectation(int m, int n, bool asymptotic,
                          const std::optional<ExpectationRange>& range = std::nullopt);

RunRecord cmd_lines(const MonteCarloOptions& options);

RunRecord cmd_polytope();

RunRecord cmd_invariants(int m, int n);

/// Fraction of trials rejected, read from a record's results.
double rejection_rate(const RunRecord& record);

} // namespace typrank::app
