#include <gtest/gtest.h>

#include "typrank/error.hpp"
#include "typrank/format.hpp"

using namespace typrank;

TEST(Format, RegimeThresholds) {
    EXPECT_EQ(Format(3, 3, 4).regime(), Regime::SubBoundary);
    EXPECT_EQ(Format(3, 3, 5).regime(), Regime::Boundary);
    EXPECT_EQ(Format(3, 3, 6).regime(), Regime::Mid);
    EXPECT_EQ(Format(3, 3, 7).regime(), Regime::Tall);
    EXPECT_EQ(Format(3, 3, 8).regime(), Regime::Tall);
    EXPECT_EQ(Format(3, 3, 9).regime(), Regime::Full);
    EXPECT_EQ(Format(3, 3, 12).regime(), Regime::Full);
    EXPECT_EQ(Format(2, 3, 4).regime(), Regime::Tall);
}

// Formats with two typical ranks at the boundary length (bracketed cells).
TEST(Format, TableBoundaryCells) {
    for (auto [m, n, l] : {std::tuple{2, 2, 2}, {2, 3, 3}, {3, 3, 5}, {3, 4, 7}, {3, 5, 9}, {4, 4, 10}}) {
        const Format f(m, n, l);
        EXPECT_EQ(f.regime(), Regime::Boundary) << f.to_string();
        EXPECT_EQ(f.boundary_length(), l);
    }
    // 3x4x8 is bracketed in the table as well but lies past the boundary.
    EXPECT_EQ(Format(3, 4, 8).regime(), Regime::Mid);
}

TEST(Format, RegimesPartitionEveryShape) {
    for (int m = 2; m <= 7; ++m) {
        for (int n = m; n <= 9; ++n) {
            for (int l = n; l <= m * n + 3; ++l) {
                const int b = (m - 1) * (n - 1) + 1;
                const int hits = (l < b) + (l == b) + (b < l && l <= (m - 1) * n) +
                                 ((m - 1) * n < l && l < m * n) + (l >= m * n);
                ASSERT_EQ(hits, 1) << m << "x" << n << "x" << l;
                const Regime r = Format(m, n, l).regime();
                if (l == b) EXPECT_EQ(r, Regime::Boundary);
                if (l >= m * n) EXPECT_EQ(r, Regime::Full);
            }
        }
    }
}

TEST(Format, ParseAndPrint) {
    const Format f = Format::parse("3x4x11");
    EXPECT_EQ(f.m(), 3);
    EXPECT_EQ(f.n(), 4);
    EXPECT_EQ(f.l(), 11);
    EXPECT_EQ(f.to_string(), "3x4x11");
    EXPECT_EQ(f.complement_dim(), 1);
    EXPECT_EQ(Format::parse("2X2X2"), Format(2, 2, 2));
}

TEST(Format, RejectsInvalidShapes) {
    EXPECT_THROW(Format(1, 2, 2), Error);
    EXPECT_THROW(Format(3, 2, 4), Error);
    EXPECT_THROW(Format(2, 3, 2), Error);
    for (const char* bad : {"", "3x3", "3x3x", "axbxc", "3x3x5x1", "3x-3x5"}) {
        try {
            Format::parse(bad);
            FAIL() << "accepted '" << bad << "'";
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
        }
    }
}
