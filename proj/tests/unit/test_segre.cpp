#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "test_oracles.hpp"
#include "typrank/error.hpp"
#include "typrank/segre.hpp"

using namespace typrank;

TEST(SegreDegree, KnownValues) {
    EXPECT_EQ(segre_degree(3, 3), 6u);
    EXPECT_EQ(segre_degree(4, 4), 20u);
    const auto pascal = oracle::pascal_triangle(64);
    for (int n = 2; n <= 60; ++n) EXPECT_EQ(segre_degree(2, n), pascal[n][1]);
    for (int m = 2; m <= 32; ++m)
        for (int n = m; m + n - 2 <= 64; ++n) ASSERT_EQ(segre_degree(m, n), pascal[m + n - 2][m - 1]);
}

TEST(SegreDegree, Limits) {
    EXPECT_EQ(segre_degree(33, 33), 1832624140942590534ULL); // binom(64, 32)
    try {
        segre_degree(30, 40);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
    }
    EXPECT_THROW(segre_degree(3, 2), Error);
}

TEST(DegreeParity, Examples) {
    EXPECT_TRUE(degree_parity_lucas(2, 3));
    EXPECT_FALSE(degree_parity_lucas(3, 3));
    EXPECT_FALSE(degree_parity_lucas(2, 2));
}

TEST(DegreeParity, AgreesWithDegreeEverywhere) {
    for (int m = 2; m <= 33; ++m)
        for (int n = m; m + n - 2 <= 64; ++n)
            ASSERT_EQ(degree_parity_lucas(m, n), segre_degree(m, n) % 2 == 1) << m << "," << n;
}

TEST(Alpha, Examples) {
    EXPECT_EQ(alpha(3, 3), 2u);
    EXPECT_EQ(alpha(2, 2), 0u);
    EXPECT_EQ(alpha(3, 4), 2u);
    EXPECT_EQ(alpha(4, 4), 0u);
    EXPECT_EQ(alpha(2, 3), 1u);
    EXPECT_EQ(alpha(3, 5), 3u);
    for (int m = 2; m <= 12; ++m)
        for (int n = m; n <= 12; ++n) EXPECT_LE(alpha(m, n), segre_degree(m, n));
}

TEST(SegreInfo, Consistency) {
    for (int m = 2; m <= 12; ++m) {
        for (int n = m; n <= 12; ++n) {
            const SegreInfo s = segre_info(m, n);
            EXPECT_EQ(s.dim + s.codim, m * n - 1);
            EXPECT_EQ(s.degree_odd, s.degree % 2 == 1);
            EXPECT_LE(s.alpha, s.degree);
        }
    }
    const SegreInfo s = segre_info(3, 3);
    EXPECT_EQ(s.codim, 4);
    EXPECT_EQ(s.degree, 6u);
}

TEST(ExpectedIntersections, ThreeByNIsN) {
    for (int n = 2; n <= 50; ++n) EXPECT_NEAR(expected_intersections(3, n) / n, 1.0, 1e-12) << n;
}

TEST(ExpectedIntersections, TwoByTwoIsHalfPi) {
    // Gamma(3/2) = sqrt(pi)/2, Gamma(1) = 1.
    EXPECT_NEAR(expected_intersections(2, 2), std::numbers::pi / 2.0, 1e-13);
    EXPECT_NEAR(expected_intersections(2, 3), 2.0, 1e-13);
}

TEST(ExpectedIntersections, FiveByN) {
    for (int n = 2; n <= 60; ++n) {
        const double exact = n * (n + 2) / 3.0;
        EXPECT_NEAR(expected_intersections(5, n) / exact, 1.0, 1e-12) << n;
    }
}

TEST(ExpectedIntersections, SymmetricInShape) {
    for (int m = 2; m <= 40; ++m)
        for (int n = 2; n <= 40; ++n)
            EXPECT_NEAR(expected_intersections(m, n) / expected_intersections(n, m), 1.0, 1e-12);
}

TEST(ExpectedIntersections, MarkovBoundBelowOne) {
    for (int n = 2; n <= 1000; ++n) EXPECT_LT(expected_intersections(3, n) / (2.0 * n - 1.0), 1.0);
}

TEST(OddProduct, MatchesGammaForm) {
    for (int n = 2; n <= 30; ++n) EXPECT_NEAR(expected_intersections_odd_product(1, n), n, 1e-12);
    EXPECT_NEAR(expected_intersections_odd_product(2, 4), 8.0, 1e-12);
    EXPECT_NEAR(expected_intersections_odd_product(3, 2), expected_intersections(2, 7), 1e-10);
    for (int k = 1; k <= 6; ++k)
        for (int n = 2; n <= 40; ++n)
            EXPECT_NEAR(expected_intersections_odd_product(k, n) / expected_intersections(2 * k + 1, n), 1.0,
                        1e-10);
}

TEST(AsymptoticCoefficient, Values) {
    EXPECT_DOUBLE_EQ(asymptotic_coefficient(3), 1.0);
    EXPECT_DOUBLE_EQ(asymptotic_coefficient(5), 1.0 / 3.0);
    EXPECT_NEAR(asymptotic_coefficient(4), std::sqrt(std::numbers::pi / 2.0) / 2.0, 1e-15);
    EXPECT_NEAR(asymptotic_coefficient(4), 0.6267, 1e-4);
    EXPECT_NEAR(asymptotic_coefficient(2), std::sqrt(std::numbers::pi / 2.0), 1e-15);
    EXPECT_DOUBLE_EQ(double_factorial(0), 1.0);
    EXPECT_DOUBLE_EQ(double_factorial(1), 1.0);
    EXPECT_DOUBLE_EQ(double_factorial(7), 105.0);
}

TEST(AsymptoticRatio, ConvergesLikeOneOverN) {
    for (int m : {4, 5}) {
        EXPECT_LE(std::abs(asymptotic_ratio(m, 100) - 1.0), 0.05);
        EXPECT_LE(std::abs(asymptotic_ratio(m, 500) - 1.0), 0.01);
        // Least-squares slope of log|ratio - 1| against log n.
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int count = 0;
        for (double n = 50; n <= 5000; n *= 1.25) {
            const double x = std::log(n);
            const double y = std::log(std::abs(asymptotic_ratio(m, static_cast<int>(n)) - 1.0));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++count;
        }
        const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
        EXPECT_NEAR(slope, -1.0, 0.2) << "m=" << m;
    }
}
