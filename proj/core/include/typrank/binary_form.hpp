#pragma once

#include <vector>

#include <Eigen/Dense>

namespace typrank {

/// Homogeneous form f(x0, x1) = sum_i c_i x0^(d-i) x1^i. Dehomogenizing at
/// x0 = 1 gives the ascending polynomial sum_i c_i t^i with t = x1 / x0, so a
/// vanishing top coefficient c_d is a root at [0:1].
class BinaryForm {
public:
    explicit BinaryForm(std::vector<double> coefficients);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coefficients() const noexcept { return coeffs_; }

    double operator()(double x0, double x1) const;

    /// Copy scaled to unit max-norm.
    BinaryForm normalized() const;

private:
    std::vector<double> coeffs_;
};

struct BinaryRoots {
    int count = 0;
    /// Unit vectors (x0, x1) with the first nonzero coordinate positive.
    std::vector<Eigen::Vector2d> roots;
};

/// Distinct real projective roots of f. Companion-matrix eigenvalues are
/// cross-checked against a Sturm count; a mismatch, or any root whose
/// |imag| / (1 + |real|) lies in (tau/10, 10 tau), raises
/// Error(AmbiguousRoots). Throws Error(DegenerateSystem) for the zero form.
BinaryRoots real_roots_binary_form(const BinaryForm& form, double tau = 1e-7);

} // namespace typrank
