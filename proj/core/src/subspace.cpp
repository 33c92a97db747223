#include "typrank/subspace.hpp"

#include <algorithm>
#include <cmath>

#include "typrank/error.hpp"

namespace typrank {

namespace {

constexpr double kRankTolerance = 1e-10;
constexpr double kOrthonormalTolerance = 1e-10;

int numerical_rank(const Eigen::MatrixXd& columns) {
    if (columns.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(columns);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > kRankTolerance * s(0)) ++rank;
    return rank;
}

} // namespace

Eigen::VectorXd flatten(const Eigen::MatrixXd& matrix) {
    Eigen::VectorXd out(matrix.size());
    for (Eigen::Index i = 0; i < matrix.rows(); ++i)
        for (Eigen::Index j = 0; j < matrix.cols(); ++j) out(i * matrix.cols() + j) = matrix(i, j);
    return out;
}

Eigen::MatrixXd unflatten(const Eigen::VectorXd& vec, int rows, int cols) {
    Eigen::MatrixXd out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out(i, j) = vec(i * cols + j);
    return out;
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& columns) {
    Eigen::MatrixXd q = columns;
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index j = 0; j < k; ++j) q.col(k) -= q.col(j).dot(q.col(k)) * q.col(j);
        }
        const double norm = q.col(k).norm();
        if (norm == 0.0) throw Error(ErrorKind::DegenerateSpan, "zero column in Gram-Schmidt");
        q.col(k) /= norm;
    }
    return q;
}

MatrixSubspace::MatrixSubspace(int rows, int cols, Eigen::MatrixXd columns)
    : rows_(rows), cols_(cols), columns_(std::move(columns)) {
    if (rows < 1 || cols < 1 || columns_.rows() != static_cast<Eigen::Index>(rows) * cols)
        throw Error(ErrorKind::InvalidArgument, "basis does not match the ambient shape");
    if (columns_.cols() < 1 || columns_.cols() > columns_.rows())
        throw Error(ErrorKind::InvalidArgument, "subspace dimension out of range");
    if (orthonormality_residual() > kOrthonormalTolerance)
        throw Error(ErrorKind::InvalidArgument, "basis is not orthonormal");
}

MatrixSubspace span_of_columns(int rows, int cols, const Eigen::MatrixXd& columns) {
    const Eigen::Index target = std::min<Eigen::Index>(columns.cols(), columns.rows());
    const int rank = numerical_rank(columns);
    if (rank < target)
        throw Error(ErrorKind::DegenerateSpan, "numerical rank " + std::to_string(rank) +
                                                   " below " + std::to_string(target));
    if (columns.cols() <= columns.rows()) return MatrixSubspace(rows, cols, orthonormalize(columns));
    // More spanning elements than the ambient dimension: the span is everything.
    return MatrixSubspace(rows, cols,
                          Eigen::MatrixXd::Identity(columns.rows(), columns.rows()));
}

MatrixSubspace MatrixSubspace::from_spanning(int rows, int cols,
                                             const std::vector<Eigen::MatrixXd>& spanning) {
    Eigen::MatrixXd columns(static_cast<Eigen::Index>(rows) * cols,
                            static_cast<Eigen::Index>(spanning.size()));
    for (std::size_t k = 0; k < spanning.size(); ++k) {
        if (spanning[k].rows() != rows || spanning[k].cols() != cols)
            throw Error(ErrorKind::InvalidArgument, "spanning matrix has the wrong shape");
        columns.col(static_cast<Eigen::Index>(k)) = flatten(spanning[k]);
    }
    return span_of_columns(rows, cols, columns);
}

Eigen::MatrixXd MatrixSubspace::basis_element(int k) const {
    return unflatten(columns_.col(k), rows_, cols_);
}

std::vector<Eigen::MatrixXd> MatrixSubspace::basis() const {
    std::vector<Eigen::MatrixXd> out;
    out.reserve(static_cast<std::size_t>(dim()));
    for (int k = 0; k < dim(); ++k) out.push_back(basis_element(k));
    return out;
}

Eigen::MatrixXd MatrixSubspace::project(const Eigen::MatrixXd& matrix) const {
    const Eigen::VectorXd v = flatten(matrix);
    return unflatten(columns_ * (columns_.transpose() * v), rows_, cols_);
}

double MatrixSubspace::orthonormality_residual() const {
    const Eigen::MatrixXd gram = columns_.transpose() * columns_;
    return (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

MatrixSubspace slice_span(const Tensor3& tensor) {
    const auto& f = tensor.format();
    std::vector<Eigen::MatrixXd> slices;
    slices.reserve(static_cast<std::size_t>(f.l()));
    for (int k = 0; k < f.l(); ++k) slices.push_back(tensor.slice(k));
    return MatrixSubspace::from_spanning(f.m(), f.n(), slices);
}

MatrixSubspace uniform_subspace(int d, int rows, int cols, SeededRng& rng) {
    const int ambient = rows * cols;
    if (d < 1 || d > ambient)
        throw Error(ErrorKind::InvalidArgument, "subspace dimension must lie in [1, mn]");
    if (d == ambient)
        return MatrixSubspace(rows, cols, Eigen::MatrixXd::Identity(ambient, ambient));
    for (int attempt = 0; attempt < 8; ++attempt) {
        Eigen::MatrixXd columns(ambient, d);
        for (Eigen::Index j = 0; j < columns.cols(); ++j)
            for (Eigen::Index i = 0; i < columns.rows(); ++i) columns(i, j) = rng.normal();
        try {
            return span_of_columns(rows, cols, columns);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateSpan) throw;
        }
    }
    throw Error(ErrorKind::DegenerateSpan, "uniform_subspace: repeated degenerate draws");
}

MatrixSubspace orthogonal_complement(const MatrixSubspace& subspace) {
    const int ambient = subspace.ambient_dim();
    const int d = subspace.dim();
    if (d == ambient)
        throw Error(ErrorKind::InvalidArgument, "complement of the full space is zero");
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(subspace.columns());
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(ambient, ambient);
    // Re-project the trailing block to clean rounding, then orthonormalize.
    Eigen::MatrixXd tail = q.rightCols(ambient - d);
    tail -= subspace.columns() * (subspace.columns().transpose() * tail);
    return MatrixSubspace(subspace.rows(), subspace.cols(), orthonormalize(tail));
}

double subspace_distance(const MatrixSubspace& a, const MatrixSubspace& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::InvalidArgument, "subspaces live in different ambient spaces");
    const Eigen::MatrixXd pa = a.columns() * a.columns().transpose();
    const Eigen::MatrixXd pb = b.columns() * b.columns().transpose();
    return (pa - pb).norm();
}

} // namespace typrank
