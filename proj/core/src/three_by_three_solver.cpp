#include <array>
#include <cmath>
#include <complex>

#include "linalg_util.hpp"
#include "typrank/error.hpp"
#include "typrank/polynomial.hpp"
#include "typrank/solvers.hpp"

namespace typrank {

namespace {

using cd = std::complex<double>;
using Vector3cd = Eigen::Vector3cd;

constexpr int kResultantDegree = 9;
constexpr int kResultantNodes = 19;
constexpr int kExpectedPoints = 6;

template <typename T>
T ipow(T base, int e) {
    T acc = T(1);
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

// Ternary cubic sum_{a+b+c=3} coef[a][b] w0^a w1^b w2^c.
struct TernaryCubic {
    std::array<std::array<double, 4>, 4> coef{};

    template <typename T>
    T operator()(const Eigen::Matrix<T, 3, 1>& w) const {
        T acc = T(0);
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 3; ++b)
                acc += coef[a][b] * ipow(w(0), a) * ipow(w(1), b) * ipow(w(2), 3 - a - b);
        return acc;
    }

    Vector3cd gradient(const Vector3cd& w) const {
        Vector3cd g = Vector3cd::Zero();
        for (int a = 0; a <= 3; ++a) {
            for (int b = 0; a + b <= 3; ++b) {
                const int c = 3 - a - b;
                const double k = coef[a][b];
                if (k == 0.0) continue;
                if (a > 0) g(0) += k * double(a) * ipow(w(0), a - 1) * ipow(w(1), b) * ipow(w(2), c);
                if (b > 0) g(1) += k * double(b) * ipow(w(0), a) * ipow(w(1), b - 1) * ipow(w(2), c);
                if (c > 0) g(2) += k * double(c) * ipow(w(0), a) * ipow(w(1), b) * ipow(w(2), c - 1);
            }
        }
        return g;
    }

    /// Coefficient of v^b as a polynomial in u after setting w = (u, v, 1).
    Coefficients v_coefficient(int b) const {
        Coefficients p(static_cast<std::size_t>(4 - b), 0.0);
        for (int a = 0; a + b <= 3; ++a) p[static_cast<std::size_t>(a)] = coef[a][b];
        return p;
    }

    Eigen::Matrix<double, 10, 1> flat() const {
        Eigen::Matrix<double, 10, 1> out;
        int k = 0;
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 3; ++b) out(k++) = coef[a][b];
        return out;
    }
};

// det(A w, B w, C w) expanded into monomials of w.
TernaryCubic column_determinant(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b,
                                const Eigen::Matrix3d& c) {
    TernaryCubic out;
    for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) {
            for (int r = 0; r < 3; ++r) {
                Eigen::Matrix3d cols;
                cols << a.col(p), b.col(q), c.col(r);
                std::array<int, 3> e{0, 0, 0};
                ++e[p];
                ++e[q];
                ++e[r];
                out.coef[e[0]][e[1]] += cols.determinant();
            }
        }
    }
    return out;
}

// The four maximal minors of [M0 w | M1 w | M2 w | M3 w], minor j omitting column j.
std::array<TernaryCubic, 4> maximal_minors(const std::array<Eigen::Matrix3d, 4>& m) {
    std::array<TernaryCubic, 4> minors;
    for (int j = 0; j < 4; ++j) {
        std::array<int, 3> keep{};
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != j) keep[static_cast<std::size_t>(k++)] = i;
        minors[static_cast<std::size_t>(j)] = column_determinant(m[keep[0]], m[keep[1]], m[keep[2]]);
    }
    return minors;
}

TernaryCubic combine(const std::array<TernaryCubic, 4>& f, const Eigen::Vector4d& weights) {
    TernaryCubic g;
    for (int j = 0; j < 4; ++j)
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 3; ++b) g.coef[a][b] += weights(j) * f[static_cast<std::size_t>(j)].coef[a][b];
    return g;
}

// 6 x 6 Sylvester matrix in v of two cubics whose coefficients depend on u.
// Acting on (v^5, ..., v, 1) it returns (v^s g1, v^s g2) for s = 0, 1, 2.
template <typename T>
Eigen::Matrix<T, 6, 6> sylvester(const TernaryCubic& g1, const TernaryCubic& g2, T u) {
    Eigen::Matrix<T, 6, 6> s = Eigen::Matrix<T, 6, 6>::Zero();
    for (int b = 0; b <= 3; ++b) {
        const Coefficients p1 = g1.v_coefficient(b);
        const Coefficients p2 = g2.v_coefficient(b);
        T v1 = T(0), v2 = T(0);
        for (auto it = p1.rbegin(); it != p1.rend(); ++it) v1 = v1 * u + *it;
        for (auto it = p2.rbegin(); it != p2.rend(); ++it) v2 = v2 * u + *it;
        for (int shift = 0; shift < 3; ++shift) {
            s(shift, 5 - (b + shift)) = v1;
            s(3 + shift, 5 - (b + shift)) = v2;
        }
    }
    return s;
}

// Newton on (g1, g2, c^H w - 1) in homogeneous coordinates.
Vector3cd polish(const TernaryCubic& g1, const TernaryCubic& g2, Vector3cd w) {
    const Vector3cd anchor = w / w.squaredNorm();
    for (int it = 0; it < 12; ++it) {
        Eigen::Matrix3cd jac;
        jac.row(0) = g1.gradient(w).transpose();
        jac.row(1) = g2.gradient(w).transpose();
        jac.row(2) = anchor.adjoint();
        Vector3cd rhs(g1(w), g2(w), anchor.dot(w) - 1.0);
        const Vector3cd step = jac.fullPivLu().solve(rhs);
        if (!step.allFinite()) break;
        w -= step;
        if (step.norm() <= 1e-15 * w.norm()) break;
    }
    return w;
}

Eigen::Matrix<cd, 3, 4> stacked_columns(const std::array<Eigen::Matrix3d, 4>& m, const Vector3cd& y) {
    Eigen::Matrix<cd, 3, 4> out;
    for (int i = 0; i < 4; ++i) out.col(i) = m[static_cast<std::size_t>(i)].cast<cd>() * y;
    return out;
}

// sigma_3 / sigma_1 of B(y): zero exactly on the determinantal locus.
double rank_defect(const std::array<Eigen::Matrix3d, 4>& m, const Vector3cd& y) {
    Eigen::JacobiSVD<Eigen::Matrix<cd, 3, 4>> svd(stacked_columns(m, y));
    const auto& s = svd.singularValues();
    return s(0) > 0 ? s(2) / s(0) : 1.0;
}

// Unit vector with the largest-modulus coordinate rotated onto the positive reals.
Vector3cd phase_normalize(Vector3cd y) {
    y.normalize();
    Eigen::Index k = 0;
    y.cwiseAbs().maxCoeff(&k);
    return y * (std::conj(y(k)) / std::abs(y(k)));
}

struct Attempt {
    bool complete = false;
    std::vector<Vector3cd> solutions;
    std::string note;
};

Attempt solve_once(const std::array<Eigen::Matrix3d, 4>& m, SeededRng& rng, double tau_res) {
    Attempt attempt;
    const Eigen::Matrix3d q = detail::random_orthogonal(3, rng);
    std::array<Eigen::Matrix3d, 4> rotated;
    for (int i = 0; i < 4; ++i) rotated[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)] * q;
    const auto minors = maximal_minors(rotated);

    Eigen::Matrix<double, 10, 4> stacked;
    for (int j = 0; j < 4; ++j) stacked.col(j) = minors[static_cast<std::size_t>(j)].flat();
    const auto sv = stacked.jacobiSvd().singularValues();
    if (sv(3) < 1e-10 * sv(0)) throw Error(ErrorKind::DegenerateSystem, "minors are linearly dependent");

    Eigen::Vector4d w1, w2;
    for (int j = 0; j < 4; ++j) {
        w1(j) = rng.normal();
        w2(j) = rng.normal();
    }
    TernaryCubic g1 = combine(minors, w1);
    TernaryCubic g2 = combine(minors, w2);
    const double s1 = g1.flat().cwiseAbs().maxCoeff();
    const double s2 = g2.flat().cwiseAbs().maxCoeff();
    for (auto& row : g1.coef)
        for (double& c : row) c /= s1;
    for (auto& row : g2.coef)
        for (double& c : row) c /= s2;

    const std::vector<double> nodes = chebyshev_nodes(kResultantNodes);
    std::vector<double> values;
    values.reserve(nodes.size());
    for (double u : nodes) values.push_back(sylvester<double>(g1, g2, u).determinant());
    Coefficients resultant = normalize_max(fit_polynomial(nodes, values, kResultantDegree));
    if (std::abs(resultant.back()) < 1e-12) {
        attempt.note = "resultant lost degree";
        return attempt;
    }

    std::vector<Vector3cd> survivors;
    for (const cd& u : companion_roots(resultant)) {
        Eigen::JacobiSVD<Eigen::Matrix<cd, 6, 6>> svd(sylvester<cd>(g1, g2, u), Eigen::ComputeFullV);
        const Eigen::Matrix<cd, 6, 1> z = svd.matrixV().col(5);
        const cd v = std::abs(z(5)) >= std::abs(z(1)) ? z(4) / z(5) : z(0) / z(1);
        Vector3cd w = polish(g1, g2, Vector3cd(u, v, 1.0));
        if (!w.allFinite()) continue;
        const Vector3cd y = (q.cast<cd>() * w).normalized();
        if (rank_defect(m, y) > tau_res) continue;
        bool duplicate = false;
        for (const auto& s : survivors)
            if (std::abs(s.dot(y)) > 1.0 - 1e-10) duplicate = true;
        if (!duplicate) survivors.push_back(y);
    }
    if (static_cast<int>(survivors.size()) != kExpectedPoints) {
        attempt.note = std::to_string(survivors.size()) + " of 9 candidates survived filtering";
        return attempt;
    }
    attempt.complete = true;
    attempt.solutions = std::move(survivors);
    return attempt;
}

} // namespace

IntersectionResult three_by_three_intersection_count(const MatrixSubspace& subspace,
                                                     SeededRng& rng,
                                                     const SolverTolerances& tol) {
    if (subspace.rows() != 3 || subspace.cols() != 3 || subspace.dim() != 5)
        throw Error(ErrorKind::InvalidArgument, "3 x 3 solver needs a 5-dimensional subspace");
    const MatrixSubspace complement = orthogonal_complement(subspace);
    std::array<Eigen::Matrix3d, 4> m;
    for (int i = 0; i < 4; ++i) m[static_cast<std::size_t>(i)] = complement.basis_element(i);

    IntersectionResult result;
    result.complex_count = kExpectedPoints;
    Attempt attempt;
    for (int k = 1; k <= tol.max_attempts; ++k) {
        result.attempts = k;
        attempt = solve_once(m, rng, tol.residual);
        if (attempt.complete) break;
    }
    if (!attempt.complete) {
        result.status = SolveStatus::Ambiguous;
        result.complex_count = 0;
        result.note = "AmbiguousSystem: " + attempt.note;
        return result;
    }

    for (const Vector3cd& raw : attempt.solutions) {
        const Vector3cd y = phase_normalize(raw);
        double ratio = 0.0;
        for (int i = 0; i < 3; ++i)
            ratio = std::max(ratio, std::abs(y(i).imag()) / (1.0 + std::abs(y(i).real())));
        if (ratio > tol.real && ratio < 100.0 * tol.real) {
            result.status = SolveStatus::Ambiguous;
            result.note = "candidate in the real/complex dead zone";
        }
        if (ratio > tol.real) continue;

        const Eigen::Vector3d y_real = y.real().normalized();
        Eigen::Matrix<double, 4, 3> bt;
        for (int i = 0; i < 4; ++i) bt.row(i) = (m[static_cast<std::size_t>(i)] * y_real).transpose();
        const auto kernel = detail::null_direction(bt);
        SegrePoint point = make_segre_point(kernel.vector, y_real);
        const double residual = membership_residual(complement, point.x, point.y);
        result.max_residual = std::max(result.max_residual, residual);
        result.points.push_back(std::move(point));
    }
    result.real_count = static_cast<int>(result.points.size());
    if (result.status == SolveStatus::Certified) {
        if (result.max_residual > tol.residual) {
            result.status = SolveStatus::Ambiguous;
            result.note = "point residual " + std::to_string(result.max_residual) + " above tolerance";
        } else if (result.real_count % 2 != 0) {
            result.status = SolveStatus::Ambiguous;
            result.note = "odd number of real points";
        }
    }
    return result;
}

} // namespace typrank
