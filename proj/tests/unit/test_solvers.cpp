#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "typrank/error.hpp"
#include "typrank/segre.hpp"
#include "typrank/solvers.hpp"
#include "typrank/subspace.hpp"

using namespace typrank;

namespace {

Eigen::MatrixXd mat2(double a, double b, double c, double d) {
    Eigen::MatrixXd out(2, 2);
    out << a, b, c, d;
    return out;
}

std::vector<Eigen::MatrixXd> fixture_points(std::vector<SegrePoint>* points = nullptr) {
    const std::vector<Eigen::Vector3d> xs = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {3, 5, 1},
                                             {-1.0 / 3, 7.0 / 5, 3.0 / 17}};
    const std::vector<Eigen::Vector3d> ys = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {8, 2, 1},
                                             {-4.0 / 3, 2.0 / 5, -1.0 / 17}};
    std::vector<Eigen::MatrixXd> out;
    for (std::size_t i = 0; i < 6; ++i) {
        out.push_back(xs[i] * ys[i].transpose());
        if (points) points->push_back(make_segre_point(xs[i], ys[i]));
    }
    return out;
}

void expect_sound(const IntersectionResult& r, const MatrixSubspace& l) {
    const MatrixSubspace complement = orthogonal_complement(l);
    EXPECT_EQ(static_cast<int>(r.points.size()), r.real_count);
    EXPECT_LE(r.real_count, r.complex_count);
    EXPECT_EQ((r.complex_count - r.real_count) % 2, 0);
    for (const auto& p : r.points) EXPECT_LE(membership_residual(complement, p.x, p.y), 1e-8);
}

} // namespace

TEST(SegrePoint, Normalization) {
    const SegrePoint p = make_segre_point(Eigen::Vector3d(0, -2, 1), Eigen::Vector2d(-3, 4));
    EXPECT_NEAR(p.x.norm(), 1.0, 1e-15);
    EXPECT_GT(p.x(1), 0.0);
    EXPECT_GT(p.y(0), 0.0);
    const SegrePoint q = make_segre_point(Eigen::Vector3d(0, 2, -1), Eigen::Vector2d(3, -4));
    EXPECT_LT(segre_point_distance(p, q), 1e-15);
}

TEST(Pencil, RankTwoPencil) {
    const MatrixSubspace l = MatrixSubspace::from_spanning(2, 2, {mat2(1, 0, 0, 1), mat2(1, 0, 0, 2)});
    const IntersectionResult r = pencil_intersection_count(l);
    EXPECT_EQ(r.status, SolveStatus::Certified);
    EXPECT_EQ(r.real_count, 2);
    EXPECT_EQ(r.complex_count, 2);
    expect_sound(r, l);
    // The two real points are e11 and e22.
    for (const auto& p : r.points) EXPECT_NEAR(std::abs(p.x.dot(p.y)), 1.0, 1e-9);
}

TEST(Pencil, RotationPencilHasNoRealPoints) {
    const MatrixSubspace l = MatrixSubspace::from_spanning(2, 2, {mat2(1, 0, 0, 1), mat2(0, -1, 1, 0)});
    const IntersectionResult r = pencil_intersection_count(l);
    EXPECT_EQ(r.real_count, 0);
    EXPECT_EQ(r.complex_count, 2);
}

TEST(Pencil, RandomTwoByNParityAndSoundness) {
    for (int n = 2; n <= 6; ++n) {
        for (int t = 0; t < 50; ++t) {
            SeededRng rng(31, static_cast<std::uint64_t>(100 * n + t));
            const MatrixSubspace l = uniform_subspace(n, 2, n, rng);
            try {
                const IntersectionResult r = pencil_intersection_count(l);
                if (r.status != SolveStatus::Certified) continue;
                EXPECT_EQ(r.complex_count, n);
                EXPECT_EQ((r.real_count - n) % 2, 0);
                expect_sound(r, l);
            } catch (const Error& e) {
                EXPECT_TRUE(is_trial_rejection(e.kind()));
            }
        }
    }
}

TEST(Pencil, UniformLineInTwoByTwoMeetsWithProbabilityQuarterPi) {
    const int trials = 100000;
    long hits = 0, accepted = 0;
    for (int t = 0; t < trials; ++t) {
        SeededRng rng(32, static_cast<std::uint64_t>(t));
        try {
            const IntersectionResult r = pencil_intersection_count(uniform_subspace(2, 2, 2, rng));
            if (r.status != SolveStatus::Certified) continue;
            ASSERT_TRUE(r.real_count == 0 || r.real_count == 2);
            ++accepted;
            hits += r.real_count == 2;
        } catch (const Error& e) {
            ASSERT_TRUE(is_trial_rejection(e.kind()));
        }
    }
    ASSERT_GE(accepted, trials * 99 / 100);
    const double p = std::numbers::pi / 4.0;
    const double sigma = std::sqrt(p * (1 - p) / accepted);
    EXPECT_LT(std::abs(double(hits) / accepted - p), 3.0 * sigma);
}

TEST(ThreeByThree, SixPointFixture) {
    std::vector<SegrePoint> expected;
    auto mats = fixture_points(&expected);
    mats.pop_back();
    const MatrixSubspace l = MatrixSubspace::from_spanning(3, 3, mats);
    SeededRng rng(41, 0);
    const IntersectionResult r = three_by_three_intersection_count(l, rng);
    ASSERT_EQ(r.status, SolveStatus::Certified) << r.note;
    EXPECT_EQ(r.real_count, 6);
    EXPECT_EQ(r.complex_count, 6);
    expect_sound(r, l);
    for (const auto& target : expected) {
        double best = 1e9;
        for (const auto& p : r.points) best = std::min(best, segre_point_distance(p, target));
        EXPECT_LT(best, 1e-8);
    }
}

TEST(ThreeByThree, RequiresFiveDimensionalSpan) {
    SeededRng rng(42, 0);
    EXPECT_THROW(three_by_three_intersection_count(uniform_subspace(4, 3, 3, rng), rng), Error);
    EXPECT_THROW(three_by_three_intersection_count(uniform_subspace(3, 2, 3, rng), rng), Error);
}

TEST(ThreeByThree, UniformSpanMeanIsThree) {
    const int trials = 10000;
    double sum = 0.0, sq = 0.0;
    long accepted = 0;
    for (int t = 0; t < trials; ++t) {
        SeededRng rng(43, static_cast<std::uint64_t>(t));
        const MatrixSubspace l = uniform_subspace(5, 3, 3, rng);
        try {
            const IntersectionResult r = three_by_three_intersection_count(l, rng);
            if (r.status != SolveStatus::Certified) continue;
            ASSERT_EQ(r.real_count % 2, 0);
            ASSERT_LE(r.real_count, 6);
            ++accepted;
            sum += r.real_count;
            sq += r.real_count * r.real_count;
            if (t % 50 == 0) expect_sound(r, l);
        } catch (const Error& e) {
            ASSERT_TRUE(is_trial_rejection(e.kind()));
        }
    }
    ASSERT_GE(accepted, trials * 99 / 100);
    const double mean = sum / accepted;
    const double sd = std::sqrt(sq / accepted - mean * mean);
    EXPECT_LT(std::abs(mean - expected_intersections(3, 3)), 3.0 * sd / std::sqrt(double(accepted)));
}

TEST(Witness, CodimTwoInThreeByThree) {
    for (int t = 0; t < 100; ++t) {
        SeededRng rng(51, static_cast<std::uint64_t>(t));
        const MatrixSubspace l = uniform_subspace(7, 3, 3, rng);
        const auto w = rank_one_witness_search(l, rng);
        ASSERT_TRUE(w.has_value()) << t;
        EXPECT_LE(w->residual, 1e-8);
        EXPECT_LE(membership_residual(orthogonal_complement(l), w->x, w->y), 1e-8);
    }
}

TEST(Witness, CodimThreeInThreeByThreeViaPlaneCubic) {
    for (int t = 0; t < 100; ++t) {
        SeededRng rng(52, static_cast<std::uint64_t>(t));
        const MatrixSubspace l = uniform_subspace(6, 3, 3, rng);
        const auto w = rank_one_witness_search(l, rng);
        ASSERT_TRUE(w.has_value()) << t;
        EXPECT_LE(membership_residual(orthogonal_complement(l), w->x, w->y), 1e-8);
    }
}

TEST(Witness, TwoByThreeDimFour) {
    for (int t = 0; t < 20; ++t) {
        SeededRng rng(53, static_cast<std::uint64_t>(t));
        const MatrixSubspace l = uniform_subspace(4, 2, 3, rng);
        const auto w = rank_one_witness_search(l, rng);
        ASSERT_TRUE(w.has_value());
        EXPECT_EQ(w->x.size(), 2);
        EXPECT_EQ(w->y.size(), 3);
        EXPECT_LE(membership_residual(orthogonal_complement(l), w->x, w->y), 1e-8);
    }
}

TEST(Witness, UnsupportedCodimension) {
    SeededRng rng(54, 0);
    try {
        rank_one_witness_search(uniform_subspace(6, 3, 4, rng), rng);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedFormat);
    }
}
