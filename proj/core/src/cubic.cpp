#include "typrank/cubic.hpp"

#include <cmath>

#include "typrank/error.hpp"

namespace typrank {

namespace {

int monomial_index(const std::array<int, 4>& e) {
    const auto& table = cubic_monomials();
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i] == e) return static_cast<int>(i);
    throw Error(ErrorKind::InvalidArgument, "not a cubic monomial");
}

} // namespace

const std::array<std::array<int, 4>, 20>& cubic_monomials() {
    static const auto table = [] {
        std::array<std::array<int, 4>, 20> t{};
        std::size_t k = 0;
        for (int a0 = 3; a0 >= 0; --a0)
            for (int a1 = 3 - a0; a1 >= 0; --a1)
                for (int a2 = 3 - a0 - a1; a2 >= 0; --a2) t[k++] = {a0, a1, a2, 3 - a0 - a1 - a2};
        return t;
    }();
    return table;
}

double CubicSurface::operator()(const Eigen::Vector4d& z) const {
    const auto& table = cubic_monomials();
    double acc = 0.0;
    for (std::size_t k = 0; k < table.size(); ++k) {
        double term = coefficients[k];
        for (int v = 0; v < 4; ++v)
            for (int p = 0; p < table[k][static_cast<std::size_t>(v)]; ++p) term *= z(v);
        acc += term;
    }
    return acc;
}

double CubicSurface::determinant_at(const Eigen::Vector4d& z) const {
    Eigen::Matrix3d sum = Eigen::Matrix3d::Zero();
    for (int i = 0; i < 4; ++i) sum += z(i) * matrices[static_cast<std::size_t>(i)];
    return sum.determinant();
}

CubicSurface make_cubic_surface(const std::array<Eigen::Matrix3d, 4>& matrices) {
    static constexpr std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                                             {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
    static constexpr std::array<double, 6> signs{1, 1, 1, -1, -1, -1};
    CubicSurface s;
    s.matrices = matrices;
    for (std::size_t p = 0; p < perms.size(); ++p) {
        const auto& sigma = perms[p];
        for (int i0 = 0; i0 < 4; ++i0) {
            for (int i1 = 0; i1 < 4; ++i1) {
                for (int i2 = 0; i2 < 4; ++i2) {
                    const double term = signs[p] * matrices[static_cast<std::size_t>(i0)](0, sigma[0]) *
                                        matrices[static_cast<std::size_t>(i1)](1, sigma[1]) *
                                        matrices[static_cast<std::size_t>(i2)](2, sigma[2]);
                    if (term == 0.0) continue;
                    std::array<int, 4> e{0, 0, 0, 0};
                    ++e[static_cast<std::size_t>(i0)];
                    ++e[static_cast<std::size_t>(i1)];
                    ++e[static_cast<std::size_t>(i2)];
                    s.coefficients[static_cast<std::size_t>(monomial_index(e))] += term;
                }
            }
        }
    }
    return s;
}

CubicSurface random_cubic(SeededRng& rng) {
    std::array<Eigen::Matrix3d, 4> m;
    for (auto& mat : m)
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i) mat(i, j) = rng.normal();
    return make_cubic_surface(m);
}

int real_lines_from_count(int source_count) {
    switch (source_count) {
    case 0: return 3;
    case 2: return 7;
    case 4: return 15;
    case 6: return 27;
    default:
        throw Error(ErrorKind::InvalidArgument,
                    "no real-line class for intersection count " + std::to_string(source_count));
    }
}

LineCountResult count_real_lines(const CubicSurface& surface, SeededRng& rng,
                                 const SolverTolerances& tol) {
    const std::vector<Eigen::MatrixXd> spanning(surface.matrices.begin(), surface.matrices.end());
    MatrixSubspace span = [&] {
        try {
            return MatrixSubspace::from_spanning(3, 3, spanning);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateSpan) throw;
            throw Error(ErrorKind::DegenerateSurface, "M0..M3 span fewer than four dimensions");
        }
    }();
    const IntersectionResult result =
        three_by_three_intersection_count(orthogonal_complement(span), rng, tol);
    if (result.status != SolveStatus::Certified) throw Error(ErrorKind::TrialAmbiguous, result.note);
    return LineCountResult{real_lines_from_count(result.real_count), result.real_count};
}

double LineStatistics::q_hat(int lines) const {
    const auto it = line_tallies.find(lines);
    const long n = accepted();
    return it == line_tallies.end() || n == 0 ? 0.0
                                              : static_cast<double>(it->second) / static_cast<double>(n);
}

LineStatistics line_statistics_from_counts(const CountDistribution& counts) {
    LineStatistics stats;
    stats.trials = counts.trials;
    stats.rejected = counts.rejected;
    stats.points = counts;
    for (int lines : {3, 7, 15, 27}) stats.line_tallies[lines] = 0;
    for (const auto& [count, tally] : counts.tallies) stats.line_tallies[real_lines_from_count(count)] += tally;

    const long n = stats.accepted();
    if (n == 0) return stats;
    const double nd = static_cast<double>(n);
    for (const auto& [lines, tally] : stats.line_tallies) stats.expected_lines += lines * (tally / nd);
    if (n > 1) {
        double spread = 0.0;
        for (const auto& [lines, tally] : stats.line_tallies)
            spread += (lines - stats.expected_lines) * (lines - stats.expected_lines) * static_cast<double>(tally);
        stats.expected_lines_stderr = std::sqrt(spread / (nd - 1.0) / nd);
    }
    stats.expected_lines_ci = 1.96 * stats.expected_lines_stderr;
    stats.mean_points = counts.mean();
    stats.mean_points_stderr = counts.mean_stderr();
    stats.p6 = counts.probability(6);
    stats.p6_stderr = std::sqrt(stats.p6 * (1.0 - stats.p6) / nd);
    return stats;
}

LineStatistics estimate_line_statistics(long trials, std::uint64_t seed, int workers,
                                        const SolverTolerances& tol) {
    if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be positive");
    const auto outcomes = parallel_trials(trials, workers, [&](long i) {
        SeededRng rng(seed, static_cast<std::uint64_t>(i));
        const CubicSurface surface = random_cubic(rng);
        try {
            return count_real_lines(surface, rng, tol).source_count;
        } catch (const Error& e) {
            if (!is_trial_rejection(e.kind())) throw;
            return -1;
        }
    });
    CountDistribution counts;
    counts.support = {0, 2, 4, 6};
    for (int c : counts.support) counts.tallies[c] = 0;
    counts.trials = trials;
    for (int c : outcomes) {
        if (c < 0) ++counts.rejected;
        else ++counts.tallies[c];
    }
    return line_statistics_from_counts(counts);
}

} // namespace typrank
