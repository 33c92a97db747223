#include "typrank/monte_carlo.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "typrank/classifier.hpp"
#include "typrank/error.hpp"
#include "typrank/segre.hpp"
#include "typrank/tensor.hpp"

namespace typrank {

Interval wilson_interval(long successes, long trials, double z) {
    if (trials < 1 || successes < 0 || successes > trials)
        throw Error(ErrorKind::InvalidArgument, "wilson_interval needs 0 <= successes <= trials, trials >= 1");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    Interval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
    if (successes == 0) ci.lo = 0.0;
    if (successes == trials) ci.hi = 1.0;
    return ci;
}

double ProbEstimate::stderr_() const {
    const long n = accepted();
    return n > 0 ? std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n)) : 0.0;
}

ProbEstimate make_estimate(long successes, long trials, long rejected) {
    ProbEstimate e;
    e.successes = successes;
    e.trials = trials;
    e.rejected = rejected;
    const long n = e.accepted();
    if (n > 0) {
        e.p_hat = static_cast<double>(successes) / static_cast<double>(n);
        e.ci95 = wilson_interval(successes, n, 1.96);
    } else {
        e.ci95 = Interval{0.0, 1.0};
    }
    return e;
}

double CountDistribution::probability(int count) const {
    const auto it = tallies.find(count);
    const long n = accepted();
    return it == tallies.end() || n == 0 ? 0.0 : static_cast<double>(it->second) / static_cast<double>(n);
}

double CountDistribution::mean() const {
    double acc = 0.0;
    for (const auto& [count, tally] : tallies) acc += count * probability(count);
    return acc;
}

double CountDistribution::mean_stderr() const {
    const long n = accepted();
    if (n < 2) return 0.0;
    const double mu = mean();
    double second = 0.0;
    for (const auto& [count, tally] : tallies) second += (count - mu) * (count - mu) * static_cast<double>(tally);
    return std::sqrt(second / static_cast<double>(n - 1) / static_cast<double>(n));
}

std::vector<int> count_support(int m, int n) {
    const auto degree = static_cast<int>(segre_degree(m, n));
    std::vector<int> support;
    for (int c = degree % 2; c <= degree; c += 2) support.push_back(c);
    return support;
}

namespace {

struct TrialOutcome {
    bool rejected = false;
    int rank = 0;
    int count = -1;
};

} // namespace

RankEstimate monte_carlo_rank(const Format& format, long trials, std::uint64_t seed, int workers,
                              const SolverTolerances& tol) {
    require_supported(format);
    if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be positive");

    const auto outcomes = parallel_trials(trials, workers, [&](long i) {
        SeededRng rng(seed, static_cast<std::uint64_t>(i));
        const Tensor3 tensor = sample_gaussian_tensor(format, rng);
        TrialOutcome out;
        try {
            const RankVerdict verdict = classify_rank(tensor, rng, tol);
            out.rank = verdict.rank;
            if (verdict.intersection) out.count = verdict.intersection->real_count;
        } catch (const Error& e) {
            if (!is_trial_rejection(e.kind())) throw;
            out.rejected = true;
        }
        return out;
    });

    RankEstimate estimate{format};
    estimate.trials = trials;
    std::map<int, long> rank_tallies;
    std::vector<int> ranks;
    switch (format.regime()) {
    case Regime::Boundary:
    case Regime::Mid: ranks = {format.l(), format.l() + 1}; break;
    case Regime::Tall: ranks = {format.l()}; break;
    default: ranks = {format.matrix_size()}; break;
    }
    for (int r : ranks) rank_tallies[r] = 0;

    std::optional<CountDistribution> counts;
    if (format.regime() == Regime::Boundary) {
        counts.emplace();
        counts->support = count_support(format.m(), format.n());
        for (int c : counts->support) counts->tallies[c] = 0;
        counts->trials = trials;
    }
    for (const auto& o : outcomes) {
        if (o.rejected) {
            ++estimate.rejected;
            continue;
        }
        ++rank_tallies[o.rank];
        if (counts) ++counts->tallies[o.count];
    }
    if (counts) counts->rejected = estimate.rejected;
    for (const auto& [rank, tally] : rank_tallies)
        estimate.ranks[rank] = make_estimate(tally, trials, estimate.rejected);
    estimate.counts = std::move(counts);
    return estimate;
}

int default_worker_count() {
    if (const char* env = std::getenv("TYPRANK_WORKERS")) {
        try {
            const int value = std::stoi(env);
            if (value > 0) return value;
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace typrank
