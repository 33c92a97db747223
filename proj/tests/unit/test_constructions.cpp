#include <gtest/gtest.h>

#include "typrank/error.hpp"
#include "typrank/segre.hpp"
#include "typrank/solvers.hpp"

using namespace typrank;

namespace {

void expect_points_in(const MatrixSubspace& l, const std::vector<SegrePoint>& points) {
    const MatrixSubspace complement = orthogonal_complement(l);
    for (const auto& p : points) EXPECT_LE(membership_residual(complement, p.x, p.y), 1e-9);
}

// Greedy matching of two point sets within `tol`.
bool same_point_set(const std::vector<SegrePoint>& a, const std::vector<SegrePoint>& b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& p : a) {
        bool matched = false;
        for (std::size_t j = 0; j < b.size() && !matched; ++j) {
            if (!used[j] && segre_point_distance(p, b[j]) < tol) used[j] = matched = true;
        }
        if (!matched) return false;
    }
    return true;
}

} // namespace

TEST(SpecialSlice, PointCountsMatchDegree) {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}, {2, 6}}) {
        SeededRng rng(61, static_cast<std::uint64_t>(10 * m + n));
        const SliceConstruction c = random_special_slice(m, n, rng);
        EXPECT_EQ(c.subspace.dim(), (m - 1) * (n - 1) + 1);
        EXPECT_EQ(c.points.size(), segre_degree(m, n)) << m << "x" << n;
        expect_points_in(c.subspace, c.points);
        for (std::size_t i = 0; i < c.points.size(); ++i)
            for (std::size_t j = i + 1; j < c.points.size(); ++j)
                EXPECT_GT(segre_point_distance(c.points[i], c.points[j]), 1e-6);
    }
}

TEST(SpecialSlice, DegenerateConstraintsRejected) {
    // Repeated constraints leave a three-dimensional L.
    std::vector<Eigen::VectorXd> a(2, Eigen::Vector2d(1, 0)), b(2, Eigen::Vector2d(1, 0));
    try {
        special_slice_subspace(2, 2, a, b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegeneratePosition);
    }
    EXPECT_THROW(special_slice_subspace(2, 2, {Eigen::Vector2d(1, 0)}, {Eigen::Vector2d(1, 0)}), Error);
}

TEST(ConjugateSlice, RealCountIsAlpha) {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 4}, {3, 5}, {4, 4}}) {
        SeededRng rng(62, static_cast<std::uint64_t>(10 * m + n));
        const ConjugateSliceConstruction c = conjugate_slice_subspace(m, n, rng);
        EXPECT_EQ(c.subspace.dim(), (m - 1) * (n - 1) + 1);
        EXPECT_EQ(static_cast<std::uint64_t>(c.expected_real), alpha(m, n)) << m << "x" << n;
        EXPECT_EQ(static_cast<int>(c.points.size()), c.expected_real);
        expect_points_in(c.subspace, c.points);
    }
}

TEST(OracleEquivalence, SolverMatchesSpecialSlice) {
    int certified = 0;
    for (int t = 0; t < 200; ++t) {
        SeededRng rng(63, static_cast<std::uint64_t>(t));
        const SliceConstruction c = random_special_slice(3, 3, rng);
        const IntersectionResult r = three_by_three_intersection_count(c.subspace, rng);
        if (r.status != SolveStatus::Certified) continue;
        ++certified;
        EXPECT_EQ(r.real_count, 6);
        EXPECT_TRUE(same_point_set(r.points, c.points, 1e-7)) << "trial " << t;
    }
    EXPECT_GE(certified, 198);
}

TEST(OracleEquivalence, SolverMatchesConjugateSlice) {
    int certified = 0;
    for (int t = 0; t < 200; ++t) {
        SeededRng rng(64, static_cast<std::uint64_t>(t));
        const ConjugateSliceConstruction c = conjugate_slice_subspace(3, 3, rng);
        const IntersectionResult r = three_by_three_intersection_count(c.subspace, rng);
        if (r.status != SolveStatus::Certified) continue;
        ++certified;
        EXPECT_EQ(r.real_count, 2);
        EXPECT_EQ(r.complex_count, 6);
        EXPECT_TRUE(same_point_set(r.points, c.points, 1e-7)) << "trial " << t;
    }
    EXPECT_GE(certified, 198);
}

TEST(OracleEquivalence, PencilMatchesTwoByNSlices) {
    for (int n = 2; n <= 6; ++n) {
        SeededRng rng(65, static_cast<std::uint64_t>(n));
        const SliceConstruction c = random_special_slice(2, n, rng);
        const IntersectionResult r = pencil_intersection_count(c.subspace);
        ASSERT_EQ(r.status, SolveStatus::Certified);
        EXPECT_EQ(r.real_count, n);
        EXPECT_TRUE(same_point_set(r.points, c.points, 1e-7));
    }
}
