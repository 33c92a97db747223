#include "typrank/polytope.hpp"

#include <algorithm>

namespace typrank {

namespace {

constexpr std::array<int, 4> kPointCounts{0, 2, 4, 6};
constexpr std::array<int, 4> kLineCounts{3, 7, 15, 27};

// Solves the two equality constraints for the two free probabilities by
// Cramer's rule.
BasicSolution solve_basis(int zero_a, int zero_b) {
    BasicSolution s;
    s.zeroed = {zero_a, zero_b};
    std::array<int, 2> free{};
    int k = 0;
    for (int i = 0; i < 4; ++i)
        if (i != zero_a && i != zero_b) free[static_cast<std::size_t>(k++)] = i;
    // [1 1; c_i c_j] [p_i; p_j] = [1; 3]
    const Rational ci(kPointCounts[static_cast<std::size_t>(free[0])]);
    const Rational cj(kPointCounts[static_cast<std::size_t>(free[1])]);
    const Rational det = cj - ci;
    s.p[static_cast<std::size_t>(free[0])] = (cj - Rational(3)) / det;
    s.p[static_cast<std::size_t>(free[1])] = (Rational(3) - ci) / det;
    s.feasible = std::all_of(s.p.begin(), s.p.end(), [](const Rational& v) { return v >= 0; });
    return s;
}

Rational cross(const PolygonPoint& o, const PolygonPoint& a, const PolygonPoint& b) {
    return (a.expected_lines - o.expected_lines) * (b.p6 - o.p6) -
           (a.p6 - o.p6) * (b.expected_lines - o.expected_lines);
}

} // namespace

std::vector<BasicSolution> basic_solutions() {
    std::vector<BasicSolution> out;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) out.push_back(solve_basis(a, b));
    return out;
}

Rational expected_lines(const std::array<Rational, 4>& p) {
    Rational e(0);
    for (std::size_t i = 0; i < 4; ++i) e += kLineCounts[i] * p[i];
    return e;
}

PolygonVertices polytope_vertices() {
    std::vector<PolygonPoint> pts;
    for (const auto& s : basic_solutions()) {
        if (!s.feasible) continue;
        PolygonPoint q{expected_lines(s.p), s.p[3]};
        if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
    }
    // Andrew's monotone chain, exact.
    std::sort(pts.begin(), pts.end(), [](const PolygonPoint& a, const PolygonPoint& b) {
        return a.expected_lines < b.expected_lines ||
               (a.expected_lines == b.expected_lines && a.p6 < b.p6);
    });
    if (pts.size() < 3) return PolygonVertices{pts};
    std::vector<PolygonPoint> hull;
    for (int pass = 0; pass < 2; ++pass) {
        const std::size_t start = hull.size();
        for (const auto& p : pts) {
            while (hull.size() >= start + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
                hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    return PolygonVertices{hull};
}

Rational PolygonVertices::min_expected_lines() const {
    Rational best = vertices.front().expected_lines;
    for (const auto& v : vertices) best = std::min(best, v.expected_lines);
    return best;
}

Rational PolygonVertices::max_expected_lines() const {
    Rational best = vertices.front().expected_lines;
    for (const auto& v : vertices) best = std::max(best, v.expected_lines);
    return best;
}

bool PolygonVertices::contains(double e, double p6, double slack_e, double slack_p6) const {
    // Point-in-convex-polygon, each edge relaxed by the slack box.
    const std::size_t count = vertices.size();
    for (std::size_t i = 0; i < count; ++i) {
        const auto& a = vertices[i];
        const auto& b = vertices[(i + 1) % count];
        const double ax = boost::rational_cast<double>(a.expected_lines);
        const double ay = boost::rational_cast<double>(a.p6);
        const double bx = boost::rational_cast<double>(b.expected_lines);
        const double by = boost::rational_cast<double>(b.p6);
        // Outward normal of a counterclockwise edge is (dy, -dx).
        const double nx = by - ay;
        const double ny = -(bx - ax);
        const double value = nx * (e - ax) + ny * (p6 - ay);
        const double allowance = std::abs(nx) * slack_e + std::abs(ny) * slack_p6;
        if (value > allowance) return false;
    }
    return true;
}

} // namespace typrank
