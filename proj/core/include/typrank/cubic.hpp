#pragma once

#include <array>
#include <cstdint>
#include <map>

#include <Eigen/Dense>

#include "typrank/monte_carlo.hpp"
#include "typrank/rng.hpp"
#include "typrank/solvers.hpp"

namespace typrank {

/// Exponent vectors (a0, a1, a2, a3) of the 20 cubic monomials in z0..z3, in
/// graded lexicographic order starting at z0^3.
const std::array<std::array<int, 4>, 20>& cubic_monomials();

/// Determinantal cubic surface det(z0 M0 + z1 M1 + z2 M2 + z3 M3) = 0.
struct CubicSurface {
    std::array<Eigen::Matrix3d, 4> matrices;
    std::array<double, 20> coefficients{};

    /// Value of the expanded form at z.
    double operator()(const Eigen::Vector4d& z) const;
    /// det(sum z_i M_i) evaluated directly.
    double determinant_at(const Eigen::Vector4d& z) const;
};

/// Expands the determinant over the six permutations of the 3 x 3 Leibniz
/// formula, distributing each entry's linear form over the monomials.
CubicSurface make_cubic_surface(const std::array<Eigen::Matrix3d, 4>& matrices);

CubicSurface random_cubic(SeededRng& rng);

struct LineCountResult {
    int real_lines = 0;
    int source_count = 0;
};

/// 0 -> 3, 2 -> 7, 4 -> 15, 6 -> 27. Throws Error(InvalidArgument) otherwise.
int real_lines_from_count(int source_count);

/// Counts the real lines of S through the real points of
/// span{M0..M3}^perp on the 3 x 3 Segre variety.
/// Throws Error(DegenerateSurface) if the M_i span less than four dimensions,
/// and Error(TrialAmbiguous) if the intersection could not be certified.
LineCountResult count_real_lines(const CubicSurface& surface, SeededRng& rng,
                                 const SolverTolerances& tol = {});

struct LineStatistics {
    long trials = 0;
    long rejected = 0;
    /// Real-line class (3, 7, 15, 27) -> tally.
    std::map<int, long> line_tallies;
    /// Intersection count (0, 2, 4, 6) -> tally; the same trials as above.
    CountDistribution points;

    long accepted() const noexcept { return trials - rejected; }
    double q_hat(int lines) const;
    /// Sample mean of the real-line count and its standard error.
    double expected_lines = 0.0;
    double expected_lines_stderr = 0.0;
    /// 1.96 standard errors.
    double expected_lines_ci = 0.0;
    /// 2 p2 + 4 p4 + 6 p6 and its standard error.
    double mean_points = 0.0;
    double mean_points_stderr = 0.0;
    double p6 = 0.0;
    double p6_stderr = 0.0;
};

/// Derives line statistics from an intersection-count tally of 3 x 3 boundary
/// subspaces.
LineStatistics line_statistics_from_counts(const CountDistribution& counts);

/// Monte Carlo over random cubics; trial i uses stream i of `seed`.
LineStatistics estimate_line_statistics(long trials, std::uint64_t seed, int workers = 1,
                                        const SolverTolerances& tol = {});

} // namespace typrank
