#include <cmath>

#include <gtest/gtest.h>

#include "test_oracles.hpp"
#include "typrank/binary_form.hpp"
#include "typrank/error.hpp"
#include "typrank/rng.hpp"

using namespace typrank;

namespace {

bool has_root(const BinaryRoots& r, double x0, double x1) {
    Eigen::Vector2d target(x0, x1);
    target.normalize();
    for (const auto& v : r.roots)
        if ((v - target).norm() < 1e-9 || (v + target).norm() < 1e-9) return true;
    return false;
}

} // namespace

TEST(BinaryForm, Evaluation) {
    const BinaryForm f({1.0, -2.0, 3.0}); // x0^2 - 2 x0 x1 + 3 x1^2
    EXPECT_DOUBLE_EQ(f(1.0, 0.0), 1.0);
    EXPECT_DOUBLE_EQ(f(0.0, 1.0), 3.0);
    EXPECT_DOUBLE_EQ(f(2.0, 1.0), 4.0 - 4.0 + 3.0);
    EXPECT_EQ(f.degree(), 2);
    EXPECT_DOUBLE_EQ(BinaryForm({0.5, -4.0}).normalized().coefficients()[1], -1.0);
}

TEST(BinaryRoots, SumOfSquaresHasNone) {
    const BinaryRoots r = real_roots_binary_form(BinaryForm({1.0, 0.0, 1.0}));
    EXPECT_EQ(r.count, 0);
    EXPECT_TRUE(r.roots.empty());
}

TEST(BinaryRoots, CoordinateAxes) {
    const BinaryRoots r = real_roots_binary_form(BinaryForm({0.0, -1.0, 0.0}));
    ASSERT_EQ(r.count, 2);
    EXPECT_TRUE(has_root(r, 1.0, 0.0));
    EXPECT_TRUE(has_root(r, 0.0, 1.0));
}

TEST(BinaryRoots, TopCoefficientDropIsRootAtInfinity) {
    // x0^2 x1 - x0 x1^2 ... degree 3 with c_3 = 0: x0 (x0 - x1) x1 scaled.
    const BinaryRoots r = real_roots_binary_form(BinaryForm({0.0, 1.0, -1.0, 0.0}));
    ASSERT_EQ(r.count, 3);
    EXPECT_TRUE(has_root(r, 0.0, 1.0));
    EXPECT_TRUE(has_root(r, 1.0, 0.0));
    EXPECT_TRUE(has_root(r, 1.0, 1.0));
}

TEST(BinaryRoots, KnownRealRoots) {
    // (x1 - x0)(x1 - 2 x0)(x1 + 3 x0) = x1^3 - 7 x0^2 x1 + 6 x0^3
    const BinaryRoots r = real_roots_binary_form(BinaryForm({6.0, -7.0, 0.0, 1.0}));
    ASSERT_EQ(r.count, 3);
    EXPECT_TRUE(has_root(r, 1.0, 1.0));
    EXPECT_TRUE(has_root(r, 1.0, 2.0));
    EXPECT_TRUE(has_root(r, 1.0, -3.0));
    for (const auto& v : r.roots) {
        EXPECT_NEAR(v.norm(), 1.0, 1e-12);
        EXPECT_GT(v(0) != 0.0 ? v(0) : v(1), 0.0);
    }
}

TEST(BinaryRoots, MixedRealAndComplex) {
    // (x0^2 + x1^2)(x1 - 0.5 x0) has one real root.
    const BinaryRoots r = real_roots_binary_form(BinaryForm({-0.5, 1.0, -0.5, 1.0}));
    ASSERT_EQ(r.count, 1);
    EXPECT_TRUE(has_root(r, 1.0, 0.5));
}

TEST(BinaryRoots, ScaleInvariant) {
    for (double s : {1e-12, 1e-3, 1.0, 1e6}) {
        EXPECT_EQ(real_roots_binary_form(BinaryForm({6.0 * s, -7.0 * s, 0.0, s})).count, 3);
        EXPECT_EQ(real_roots_binary_form(BinaryForm({s, 0.0, s})).count, 0);
    }
}

TEST(BinaryRoots, ZeroFormIsDegenerate) {
    try {
        real_roots_binary_form(BinaryForm({0.0, 0.0, 0.0}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateSystem);
    }
}

TEST(BinaryRoots, NearTangencyIsAmbiguousOrCounted) {
    // x0^2 + eps x1^2 - 2 x0 x1 + x1^2 has roots 1 +- i sqrt(eps).
    const double eps = 1e-14;
    try {
        const BinaryRoots r = real_roots_binary_form(BinaryForm({1.0, -2.0, 1.0 + eps}));
        EXPECT_TRUE(r.count == 0 || r.count == 1);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AmbiguousRoots);
    }
}

// Mean real-root count of Gaussian sextics against an independent grid
// sign-change oracle over the same samples.
TEST(BinaryRoots, GaussianSexticMeanMatchesGridOracle) {
    const int samples = 10000;
    double solver_sum = 0.0, oracle_sum = 0.0, oracle_sq = 0.0;
    int rejected = 0, disagreements = 0;
    for (int s = 0; s < samples; ++s) {
        SeededRng rng(21, static_cast<std::uint64_t>(s));
        std::vector<double> c(7);
        for (double& v : c) v = rng.normal();
        const BinaryForm f(c);
        const int grid = oracle::grid_sign_changes([&](double a, double b) { return f(a, b); }, 6, 8000);
        oracle_sum += grid;
        oracle_sq += grid * grid;
        try {
            const int count = real_roots_binary_form(f).count;
            solver_sum += count;
            if (count != grid) ++disagreements;
        } catch (const Error& e) {
            ASSERT_EQ(e.kind(), ErrorKind::AmbiguousRoots);
            solver_sum += grid;
            ++rejected;
        }
    }
    const double oracle_mean = oracle_sum / samples;
    const double sd = std::sqrt(oracle_sq / samples - oracle_mean * oracle_mean);
    EXPECT_LT(std::abs(solver_sum / samples - oracle_mean), 3.0 * sd / std::sqrt(double(samples)));
    EXPECT_LE(rejected, samples / 100);
    EXPECT_LE(disagreements, samples / 1000);
}
