#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "typrank/rng.hpp"
#include "typrank/subspace.hpp"

namespace typrank {

struct SolverTolerances {
    double residual = 1e-8; ///< tau_res: relative defect of x (x) y from L
    double real = 1e-7;     ///< tau_real: imag/(1+|real|) below this is real
    int max_attempts = 5;   ///< fresh randomizations before giving up
};

enum class SolveStatus { Certified, Ambiguous };

/// A real rank-one matrix x y^T, with x and y unit vectors whose first
/// nonzero coordinate is positive.
struct SegrePoint {
    Eigen::VectorXd x;
    Eigen::VectorXd y;

    Eigen::MatrixXd matrix() const { return x * y.transpose(); }
};

/// Normalizes x and y in place to the SegrePoint convention.
SegrePoint make_segre_point(Eigen::VectorXd x, Eigen::VectorXd y);

/// Projective distance between two rank-one points (sign-insensitive).
double segre_point_distance(const SegrePoint& a, const SegrePoint& b);

/// Relative distance of x (x) y from L, computed from an orthonormal basis of
/// the complement: || P_{L^perp}(x y^T) || / ||x|| ||y||.
double membership_residual(const MatrixSubspace& complement, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& y);

/// Real and complex intersection counts of L with the Segre variety.
/// Ambiguous results carry a diagnostic in `note` and should be rejected.
struct IntersectionResult {
    int real_count = 0;
    int complex_count = 0;
    std::vector<SegrePoint> points;
    double max_residual = 0.0;
    SolveStatus status = SolveStatus::Certified;
    int attempts = 1;
    std::string note;
};

struct RankOneWitness {
    Eigen::VectorXd x;
    Eigen::VectorXd y;
    double residual = 0.0;
};

/// m = 2 boundary case: L has dimension n inside 2 x n matrices. The real
/// points correspond to the real roots of the degree-n binary form det C(x),
/// where row i of C(x) is x^T M_i for an orthonormal basis M_i of L^perp.
/// Throws Error(DegenerateSystem) when det C vanishes identically.
IntersectionResult pencil_intersection_count(const MatrixSubspace& subspace,
                                             const SolverTolerances& tol = {});

/// m = n = 3 boundary case: L has dimension 5. Solves the four 3 x 3 minors of
/// B(y) = [M_0 y | M_1 y | M_2 y | M_3 y] by the hidden-variable resultant of
/// two random combinations, filtering the nine Bezout candidates down to six.
IntersectionResult three_by_three_intersection_count(const MatrixSubspace& subspace,
                                                     SeededRng& rng,
                                                     const SolverTolerances& tol = {});

/// Finds a real rank-one matrix in L. Supported: codimension k < n (generic
/// linear kernel), and 3 x 3 with k = 3 (real point on the plane cubic
/// det C(x) = 0). Throws Error(UnsupportedFormat) otherwise; returns nullopt
/// only if every attempt in a supported case failed numerically.
std::optional<RankOneWitness> rank_one_witness_search(const MatrixSubspace& subspace,
                                                      SeededRng& rng,
                                                      const SolverTolerances& tol = {});

/// L = { M : a_i^T M b_i = 0 for all i } with k = m + n - 2 constraints, plus
/// its binom(m+n-2, m-1) real intersection points enumerated combinatorially.
struct SliceConstruction {
    MatrixSubspace subspace;
    std::vector<SegrePoint> points;
};

/// Throws Error(DegeneratePosition) if some kernel is not one-dimensional.
SliceConstruction special_slice_subspace(int m, int n, const std::vector<Eigen::VectorXd>& a,
                                         const std::vector<Eigen::VectorXd>& b);

/// special_slice_subspace with Gaussian a_i, b_i.
SliceConstruction random_special_slice(int m, int n, SeededRng& rng);

/// Same construction with floor(k/2) complex-conjugate constraint pairs (and
/// one real constraint when k is odd), realified. `points` holds the real
/// points, enumerated over conjugation-closed index subsets.
struct ConjugateSliceConstruction {
    MatrixSubspace subspace;
    std::vector<SegrePoint> points;
    int expected_real = 0;
};

ConjugateSliceConstruction conjugate_slice_subspace(int m, int n, SeededRng& rng);

} // namespace typrank
