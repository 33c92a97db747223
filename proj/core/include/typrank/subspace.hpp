#pragma once

#include <vector>

#include <Eigen/Dense>

#include "typrank/rng.hpp"
#include "typrank/tensor.hpp"

namespace typrank {

/// Row-major flattening of an m x n matrix; the Euclidean inner product of two
/// flattened matrices is trace(A^T B).
Eigen::VectorXd flatten(const Eigen::MatrixXd& matrix);
Eigen::MatrixXd unflatten(const Eigen::VectorXd& vec, int rows, int cols);

/// Linear subspace of m x n real matrices held as an orthonormal basis under
/// the trace inner product.
class MatrixSubspace {
public:
    /// `columns` must already be orthonormal (checked to 1e-10).
    MatrixSubspace(int rows, int cols, Eigen::MatrixXd columns);

    /// Orthonormalizes the span of `spanning`. Throws Error(DegenerateSpan) if
    /// the numerical rank (smallest singular value below 1e-10 of the largest)
    /// is less than min(count, mn).
    static MatrixSubspace from_spanning(int rows, int cols,
                                        const std::vector<Eigen::MatrixXd>& spanning);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int ambient_dim() const noexcept { return rows_ * cols_; }
    int dim() const noexcept { return static_cast<int>(columns_.cols()); }

    /// mn x dim matrix whose columns are the flattened basis elements.
    const Eigen::MatrixXd& columns() const noexcept { return columns_; }
    Eigen::MatrixXd basis_element(int k) const;
    std::vector<Eigen::MatrixXd> basis() const;

    /// Orthogonal projection of `matrix` onto the subspace.
    Eigen::MatrixXd project(const Eigen::MatrixXd& matrix) const;

    /// max |<B_i, B_j> - delta_ij| over the stored basis.
    double orthonormality_residual() const;

private:
    int rows_;
    int cols_;
    Eigen::MatrixXd columns_;
};

/// Modified Gram-Schmidt with one reorthogonalization pass. Columns are
/// assumed linearly independent; callers check the rank first.
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& columns);

/// Span of the frontal slices of T. For ell >= mn the result is the full space.
MatrixSubspace slice_span(const Tensor3& tensor);

/// Uniformly distributed element of G(d, mn): span of d Gaussian matrices.
/// Degenerate draws are redrawn internally (at most 8 times).
MatrixSubspace uniform_subspace(int d, int rows, int cols, SeededRng& rng);

MatrixSubspace orthogonal_complement(const MatrixSubspace& subspace);

/// Frobenius distance between orthogonal projectors; 0 iff the subspaces agree.
double subspace_distance(const MatrixSubspace& a, const MatrixSubspace& b);

/// Orthonormal basis of the span of the given flattened columns, rank-checked
/// like MatrixSubspace::from_spanning.
MatrixSubspace span_of_columns(int rows, int cols, const Eigen::MatrixXd& columns);

} // namespace typrank
