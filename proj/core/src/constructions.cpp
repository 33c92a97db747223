#include <cmath>

#include "linalg_util.hpp"
#include "typrank/error.hpp"
#include "typrank/segre.hpp"
#include "typrank/solvers.hpp"

namespace typrank {

namespace {

constexpr double kKernelGap = 1e-8;
constexpr double kPointResidual = 1e-9;

// Span of the constraint matrices, which is the orthogonal complement of L.
MatrixSubspace constraint_span(int m, int n, const std::vector<Eigen::MatrixXd>& constraints) {
    try {
        return MatrixSubspace::from_spanning(m, n, constraints);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateSpan) throw;
        throw Error(ErrorKind::DegeneratePosition, "constraint matrices are dependent");
    }
}

// Unit vector orthogonal to every row; the kernel must be one-dimensional.
Eigen::VectorXd unique_kernel(const Eigen::MatrixXd& rows) {
    const auto kernel = detail::null_direction(rows);
    if (kernel.smallest > kKernelGap || kernel.second_smallest < kKernelGap)
        throw Error(ErrorKind::DegeneratePosition, "kernel is not one-dimensional");
    return kernel.vector;
}

Eigen::MatrixXd stack_rows(const std::vector<Eigen::VectorXd>& rows) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    return out;
}

SegrePoint verified_point(const MatrixSubspace& complement, const Eigen::VectorXd& x,
                          const Eigen::VectorXd& y) {
    SegrePoint p = make_segre_point(x, y);
    if (membership_residual(complement, p.x, p.y) > kPointResidual)
        throw Error(ErrorKind::DegeneratePosition, "enumerated point does not lie in L");
    return p;
}

// All subsets of {0..count-1} (as bitmasks) whose weight sum equals target.
std::vector<unsigned> subsets_with_weight(const std::vector<int>& weights, int target) {
    std::vector<unsigned> out;
    const unsigned count = static_cast<unsigned>(weights.size());
    for (unsigned mask = 0; mask < (1u << count); ++mask) {
        int total = 0;
        for (unsigned i = 0; i < count; ++i)
            if (mask & (1u << i)) total += weights[i];
        if (total == target) out.push_back(mask);
    }
    return out;
}

} // namespace

SliceConstruction special_slice_subspace(int m, int n, const std::vector<Eigen::VectorXd>& a,
                                         const std::vector<Eigen::VectorXd>& b) {
    const int k = m + n - 2;
    if (m < 2 || n < 2 || k > 24)
        throw Error(ErrorKind::InvalidArgument, "special slice needs 2 <= m, n and m + n <= 26");
    if (static_cast<int>(a.size()) != k || static_cast<int>(b.size()) != k)
        throw Error(ErrorKind::InvalidArgument, "special slice needs m + n - 2 vector pairs");
    std::vector<Eigen::MatrixXd> constraints;
    for (int i = 0; i < k; ++i) {
        if (a[static_cast<std::size_t>(i)].size() != m || b[static_cast<std::size_t>(i)].size() != n)
            throw Error(ErrorKind::InvalidArgument, "constraint vector has the wrong length");
        constraints.push_back(a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)].transpose());
    }
    const MatrixSubspace complement = constraint_span(m, n, constraints);

    std::vector<SegrePoint> points;
    for (unsigned mask : subsets_with_weight(std::vector<int>(static_cast<std::size_t>(k), 1), m - 1)) {
        std::vector<Eigen::VectorXd> x_rows, y_rows;
        for (int i = 0; i < k; ++i) {
            if (mask & (1u << i)) x_rows.push_back(a[static_cast<std::size_t>(i)]);
            else y_rows.push_back(b[static_cast<std::size_t>(i)]);
        }
        points.push_back(verified_point(complement, unique_kernel(stack_rows(x_rows)),
                                        unique_kernel(stack_rows(y_rows))));
    }
    return SliceConstruction{orthogonal_complement(complement), std::move(points)};
}

SliceConstruction random_special_slice(int m, int n, SeededRng& rng) {
    std::vector<Eigen::VectorXd> a, b;
    for (int i = 0; i < m + n - 2; ++i) {
        a.push_back(detail::gaussian_vector(m, rng));
        b.push_back(detail::gaussian_vector(n, rng));
    }
    return special_slice_subspace(m, n, a, b);
}

ConjugateSliceConstruction conjugate_slice_subspace(int m, int n, SeededRng& rng) {
    const int k = m + n - 2;
    if (m < 2 || n < 2 || k > 24)
        throw Error(ErrorKind::InvalidArgument, "conjugate slice needs 2 <= m, n and m + n <= 26");

    // Each group contributes the real span of its constraint vectors: a
    // conjugate pair (a, conj a) spans the same space as (Re a, Im a).
    struct Group {
        std::vector<Eigen::VectorXd> x_side;
        std::vector<Eigen::VectorXd> y_side;
    };
    std::vector<Group> groups;
    std::vector<Eigen::MatrixXd> constraints;
    for (int j = 0; j < k / 2; ++j) {
        const Eigen::VectorXd ar = detail::gaussian_vector(m, rng);
        const Eigen::VectorXd ai = detail::gaussian_vector(m, rng);
        const Eigen::VectorXd br = detail::gaussian_vector(n, rng);
        const Eigen::VectorXd bi = detail::gaussian_vector(n, rng);
        // Real and imaginary parts of a^T M b = 0 with a = ar + i ai, b = br + i bi.
        constraints.push_back(ar * br.transpose() - ai * bi.transpose());
        constraints.push_back(ar * bi.transpose() + ai * br.transpose());
        groups.push_back(Group{{ar, ai}, {br, bi}});
    }
    if (k % 2 == 1) {
        const Eigen::VectorXd a = detail::gaussian_vector(m, rng);
        const Eigen::VectorXd b = detail::gaussian_vector(n, rng);
        constraints.push_back(a * b.transpose());
        groups.push_back(Group{{a}, {b}});
    }
    const MatrixSubspace complement = constraint_span(m, n, constraints);

    std::vector<int> weights;
    for (const auto& g : groups) weights.push_back(static_cast<int>(g.x_side.size()));
    std::vector<SegrePoint> points;
    for (unsigned mask : subsets_with_weight(weights, m - 1)) {
        std::vector<Eigen::VectorXd> x_rows, y_rows;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            const auto& side = (mask & (1u << g)) ? groups[g].x_side : groups[g].y_side;
            auto& target = (mask & (1u << g)) ? x_rows : y_rows;
            target.insert(target.end(), side.begin(), side.end());
        }
        points.push_back(verified_point(complement, unique_kernel(stack_rows(x_rows)),
                                        unique_kernel(stack_rows(y_rows))));
    }
    const auto expected = static_cast<int>(alpha(std::min(m, n), std::max(m, n)));
    if (static_cast<int>(points.size()) != expected)
        throw Error(ErrorKind::DegeneratePosition, "real point enumeration disagrees with alpha");
    return ConjugateSliceConstruction{orthogonal_complement(complement), std::move(points), expected};
}

} // namespace typrank
