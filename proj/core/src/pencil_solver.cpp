#include <cmath>

#include "linalg_util.hpp"
#include "typrank/binary_form.hpp"
#include "typrank/error.hpp"
#include "typrank/polynomial.hpp"
#include "typrank/solvers.hpp"

namespace typrank {

SegrePoint make_segre_point(Eigen::VectorXd x, Eigen::VectorXd y) {
    auto fix = [](Eigen::VectorXd& v) {
        const double norm = v.norm();
        if (norm == 0.0) throw Error(ErrorKind::InvalidArgument, "zero vector in a Segre point");
        v /= norm;
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (std::abs(v(i)) > 1e-12) {
                if (v(i) < 0) v = -v;
                break;
            }
        }
    };
    fix(x);
    fix(y);
    return SegrePoint{std::move(x), std::move(y)};
}

double segre_point_distance(const SegrePoint& a, const SegrePoint& b) {
    const Eigen::MatrixXd pa = a.matrix() / (a.x.norm() * a.y.norm());
    const Eigen::MatrixXd pb = b.matrix() / (b.x.norm() * b.y.norm());
    return std::min((pa - pb).norm(), (pa + pb).norm());
}

double membership_residual(const MatrixSubspace& complement, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& y) {
    const Eigen::MatrixXd rank_one = x * y.transpose() / (x.norm() * y.norm());
    return (complement.columns().transpose() * flatten(rank_one)).norm();
}

IntersectionResult pencil_intersection_count(const MatrixSubspace& subspace,
                                             const SolverTolerances& tol) {
    const int n = subspace.cols();
    if (subspace.rows() != 2 || subspace.dim() != n)
        throw Error(ErrorKind::InvalidArgument,
                    "pencil solver needs a 2 x n subspace of dimension n");
    const MatrixSubspace complement = orthogonal_complement(subspace);
    const std::vector<Eigen::MatrixXd> m = complement.basis();

    auto pencil = [&](double x0, double x1) {
        Eigen::MatrixXd c(n, n);
        for (int i = 0; i < n; ++i)
            c.row(i) = x0 * m[static_cast<std::size_t>(i)].row(0) +
                       x1 * m[static_cast<std::size_t>(i)].row(1);
        return c;
    };

    const std::vector<double> nodes = chebyshev_nodes(n + 1);
    std::vector<double> values;
    values.reserve(nodes.size());
    for (double t : nodes) values.push_back(pencil(1.0, t).determinant());
    Coefficients coeffs = fit_polynomial(nodes, values, n);
    double scale = 0.0;
    for (double c : coeffs) scale = std::max(scale, std::abs(c));
    if (scale < 1e-12) throw Error(ErrorKind::DegenerateSystem, "det C(x) vanishes identically");

    IntersectionResult result;
    result.complex_count = n;
    BinaryRoots roots;
    try {
        roots = real_roots_binary_form(BinaryForm(coeffs), tol.real);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::AmbiguousRoots) throw;
        result.status = SolveStatus::Ambiguous;
        result.note = e.what();
        return result;
    }

    for (const Eigen::Vector2d& x : roots.roots) {
        const auto kernel = detail::null_direction(pencil(x(0), x(1)));
        SegrePoint point = make_segre_point(x, kernel.vector);
        const double residual = membership_residual(complement, point.x, point.y);
        result.max_residual = std::max(result.max_residual, residual);
        result.points.push_back(std::move(point));
    }
    result.real_count = roots.count;
    if (result.max_residual > tol.residual) {
        result.status = SolveStatus::Ambiguous;
        result.note = "point residual " + std::to_string(result.max_residual) + " above tolerance";
    } else if ((result.complex_count - result.real_count) % 2 != 0) {
        result.status = SolveStatus::Ambiguous;
        result.note = "real count has the wrong parity";
    }
    return result;
}

} // namespace typrank
