#include "typrank/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "typrank/error.hpp"

namespace typrank {

namespace {

double max_abs(const Coefficients& c) {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
}

Coefficients derivative(const Coefficients& c) {
    Coefficients d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(static_cast<double>(i) * c[i]);
    return d;
}

// Remainder of a / b; b must have a nonzero leading coefficient.
Coefficients remainder(Coefficients a, const Coefficients& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const double factor = a.back() / b.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
    }
    return a;
}

int sign_variations(const std::vector<Coefficients>& seq, bool at_minus_infinity) {
    int variations = 0;
    int last = 0;
    for (const auto& p : seq) {
        if (p.empty()) continue;
        int s = p.back() > 0 ? 1 : -1;
        if (at_minus_infinity && (p.size() - 1) % 2 == 1) s = -s;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

} // namespace

std::vector<double> chebyshev_nodes(int count) {
    std::vector<double> nodes(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j)
        nodes[static_cast<std::size_t>(j)] = std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * count));
    return nodes;
}

Coefficients fit_polynomial(const std::vector<double>& nodes, const std::vector<double>& values,
                            int degree) {
    if (nodes.size() != values.size() || static_cast<int>(nodes.size()) < degree + 1)
        throw Error(ErrorKind::InvalidArgument, "fit_polynomial: not enough samples");
    const auto rows = static_cast<Eigen::Index>(nodes.size());
    Eigen::MatrixXd vandermonde(rows, degree + 1);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        double power = 1.0;
        for (int j = 0; j <= degree; ++j) {
            vandermonde(i, j) = power;
            power *= nodes[static_cast<std::size_t>(i)];
        }
        rhs(i) = values[static_cast<std::size_t>(i)];
    }
    const Eigen::VectorXd solution = vandermonde.colPivHouseholderQr().solve(rhs);
    return Coefficients(solution.data(), solution.data() + solution.size());
}

Coefficients trim(Coefficients coeffs, double tol) {
    const double scale = max_abs(coeffs);
    while (!coeffs.empty() && std::abs(coeffs.back()) <= tol * scale) coeffs.pop_back();
    return coeffs;
}

Coefficients normalize_max(Coefficients coeffs) {
    const double scale = max_abs(coeffs);
    if (scale == 0.0) return coeffs;
    for (double& v : coeffs) v /= scale;
    return coeffs;
}

double evaluate(const Coefficients& coeffs, double t) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::complex<double> evaluate(const Coefficients& coeffs, std::complex<double> t) {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::vector<std::complex<double>> companion_roots(const Coefficients& coeffs) {
    if (coeffs.size() < 2 || coeffs.back() == 0.0)
        throw Error(ErrorKind::InvalidArgument, "companion_roots: leading coefficient is zero");
    const auto d = static_cast<Eigen::Index>(coeffs.size() - 1);
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < d; ++i)
        companion(i, d - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs.back();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorKind::AmbiguousRoots, "companion eigensolver did not converge");

    const Coefficients dp = derivative(coeffs);
    std::vector<std::complex<double>> roots;
    roots.reserve(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) {
        std::complex<double> z = solver.eigenvalues()(i);
        double residual = std::abs(evaluate(coeffs, z));
        for (int it = 0; it < 8 && residual > 0.0; ++it) {
            const std::complex<double> slope = evaluate(dp, z);
            if (std::abs(slope) == 0.0) break;
            const std::complex<double> next = z - evaluate(coeffs, z) / slope;
            const double next_residual = std::abs(evaluate(coeffs, next));
            if (!(next_residual < residual)) break;
            z = next;
            residual = next_residual;
        }
        roots.push_back(z);
    }
    return roots;
}

int sturm_real_root_count(const Coefficients& coeffs) {
    constexpr double kZero = 1e-11;
    Coefficients p0 = normalize_max(trim(coeffs, 0.0));
    if (p0.size() <= 1) return 0;
    std::vector<Coefficients> seq;
    seq.push_back(p0);
    seq.push_back(normalize_max(derivative(p0)));
    while (seq.back().size() > 1) {
        Coefficients r = remainder(seq[seq.size() - 2], seq.back());
        const double scale = std::max(max_abs(seq[seq.size() - 2]), max_abs(seq.back()));
        while (!r.empty() && std::abs(r.back()) <= kZero * scale) r.pop_back();
        if (r.empty()) break;
        for (double& v : r) v = -v;
        seq.push_back(normalize_max(std::move(r)));
    }
    return sign_variations(seq, true) - sign_variations(seq, false);
}

} // namespace typrank
