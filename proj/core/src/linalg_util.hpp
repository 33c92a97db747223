#pragma once

#include <Eigen/Dense>

namespace typrank::detail {

/// Right null direction of A (unit vector for the smallest singular value)
/// together with the gap sigma_{k-1} / sigma_0 that certifies a
/// one-dimensional kernel, where k = cols.
struct NullDirection {
    Eigen::VectorXd vector;
    double smallest = 0.0;      ///< sigma_min / sigma_max
    double second_smallest = 0.0;
};

inline NullDirection null_direction(const Eigen::MatrixXd& a) {
    const Eigen::Index cols = a.cols();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    Eigen::VectorXd sv = Eigen::VectorXd::Zero(cols);
    sv.head(svd.singularValues().size()) = svd.singularValues();
    const double top = sv(0) > 0 ? sv(0) : 1.0;
    NullDirection out;
    out.vector = svd.matrixV().col(cols - 1);
    out.smallest = sv(cols - 1) / top;
    out.second_smallest = cols >= 2 ? sv(cols - 2) / top : 1.0;
    return out;
}

inline Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, auto& rng) {
    Eigen::MatrixXd out(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = rng.normal();
    return out;
}

inline Eigen::VectorXd gaussian_vector(Eigen::Index size, auto& rng) {
    Eigen::VectorXd out(size);
    for (Eigen::Index i = 0; i < size; ++i) out(i) = rng.normal();
    return out;
}

/// Haar-distributed orthogonal matrix (QR of a Gaussian with sign fix).
inline Eigen::MatrixXd random_orthogonal(Eigen::Index size, auto& rng) {
    const Eigen::MatrixXd g = gaussian_matrix(size, size, rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(size, size);
    const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < size; ++i)
        if (r(i, i) < 0) q.col(i) = -q.col(i);
    return q;
}

} // namespace typrank::detail
