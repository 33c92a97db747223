#include <cmath>

#include "linalg_util.hpp"
#include "typrank/binary_form.hpp"
#include "typrank/error.hpp"
#include "typrank/polynomial.hpp"
#include "typrank/solvers.hpp"

namespace typrank {

namespace {

// Rows x^T A_i for the complement basis A_i.
Eigen::MatrixXd left_rows(const std::vector<Eigen::MatrixXd>& a, const Eigen::VectorXd& x) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(a.size()), a.front().cols());
    for (std::size_t i = 0; i < a.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = x.transpose() * a[i];
    return out;
}

// Columns A_i y, transposed so the left kernel becomes a right kernel.
Eigen::MatrixXd right_rows(const std::vector<Eigen::MatrixXd>& a, const Eigen::VectorXd& y) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(a.size()), a.front().rows());
    for (std::size_t i = 0; i < a.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = (a[i] * y).transpose();
    return out;
}

std::optional<RankOneWitness> accept(const MatrixSubspace& complement, const Eigen::VectorXd& x,
                                     const Eigen::VectorXd& y, double tau) {
    const SegrePoint p = make_segre_point(x, y);
    const double residual = membership_residual(complement, p.x, p.y);
    if (residual > tau) return std::nullopt;
    return RankOneWitness{p.x, p.y, residual};
}

} // namespace

std::optional<RankOneWitness> rank_one_witness_search(const MatrixSubspace& subspace,
                                                      SeededRng& rng,
                                                      const SolverTolerances& tol) {
    const int m = subspace.rows();
    const int n = subspace.cols();
    const int k = subspace.ambient_dim() - subspace.dim();
    if (k == 0) {
        Eigen::VectorXd x = Eigen::VectorXd::Unit(m, 0);
        Eigen::VectorXd y = Eigen::VectorXd::Unit(n, 0);
        return RankOneWitness{x, y, 0.0};
    }
    const MatrixSubspace complement = orthogonal_complement(subspace);
    const std::vector<Eigen::MatrixXd> a = complement.basis();

    if (k < n) {
        // Any x leaves k < n linear conditions on y.
        for (int attempt = 0; attempt < tol.max_attempts; ++attempt) {
            const Eigen::VectorXd x = detail::gaussian_vector(m, rng);
            const auto kernel = detail::null_direction(left_rows(a, x));
            if (auto w = accept(complement, x, kernel.vector, tol.residual)) return w;
        }
        return std::nullopt;
    }
    if (k < m) {
        for (int attempt = 0; attempt < tol.max_attempts; ++attempt) {
            const Eigen::VectorXd y = detail::gaussian_vector(n, rng);
            const auto kernel = detail::null_direction(right_rows(a, y));
            if (auto w = accept(complement, kernel.vector, y, tol.residual)) return w;
        }
        return std::nullopt;
    }
    if (m == 3 && n == 3 && k == 3) {
        // det C(x) = 0 is a real plane cubic; along a real line x = x0 p + x1 q
        // it restricts to a binary cubic, which always has a real root.
        const std::vector<double> nodes = chebyshev_nodes(4);
        for (int attempt = 0; attempt < tol.max_attempts; ++attempt) {
            const Eigen::VectorXd p = detail::gaussian_vector(3, rng);
            const Eigen::VectorXd q = detail::gaussian_vector(3, rng);
            std::vector<double> values;
            for (double t : nodes) values.push_back(left_rows(a, p + t * q).determinant());
            BinaryRoots roots;
            try {
                roots = real_roots_binary_form(BinaryForm(fit_polynomial(nodes, values, 3)), tol.real);
            } catch (const Error& e) {
                if (!is_trial_rejection(e.kind())) throw;
                continue;
            }
            for (const Eigen::Vector2d& r : roots.roots) {
                const Eigen::VectorXd x = r(0) * p + r(1) * q;
                const auto kernel = detail::null_direction(left_rows(a, x));
                if (auto w = accept(complement, x, kernel.vector, tol.residual)) return w;
            }
        }
        return std::nullopt;
    }
    throw Error(ErrorKind::UnsupportedFormat,
                "no witness route for " + std::to_string(m) + "x" + std::to_string(n) +
                    " with complement dimension " + std::to_string(k));
}

} // namespace typrank
