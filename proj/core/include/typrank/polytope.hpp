#pragma once

#include <array>
#include <vector>

#include <boost/rational.hpp>

namespace typrank {

using Rational = boost::rational<long long>;

/// A basic solution of { p >= 0, p0 + p2 + p4 + p6 = 1, 2 p2 + 4 p4 + 6 p6 = 3 }
/// obtained by setting two of (p0, p2, p4, p6) to zero.
struct BasicSolution {
    std::array<int, 2> zeroed{}; ///< indices into (p0, p2, p4, p6)
    std::array<Rational, 4> p{};
    bool feasible = false;
};

std::vector<BasicSolution> basic_solutions();

struct PolygonPoint {
    Rational expected_lines;
    Rational p6;

    friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

/// 3 p0 + 7 p2 + 15 p4 + 27 p6.
Rational expected_lines(const std::array<Rational, 4>& p);

struct PolygonVertices {
    /// Convex hull in counterclockwise order, starting at the lowest-left vertex.
    std::vector<PolygonPoint> vertices;

    Rational min_expected_lines() const;
    Rational max_expected_lines() const;

    /// True if (e, p6) lies inside the polygon grown by `slack` in each
    /// coordinate direction.
    bool contains(double e, double p6, double slack_e = 0.0, double slack_p6 = 0.0) const;
};

/// Projects the feasible basic solutions to (E, p6) and returns their hull.
PolygonVertices polytope_vertices();

} // namespace typrank
