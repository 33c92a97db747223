#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace typrank {

/// Coefficients are stored in ascending powers: c[0] + c[1] t + ... .
using Coefficients = std::vector<double>;

/// Chebyshev points of the first kind on [-1, 1].
std::vector<double> chebyshev_nodes(int count);

/// Least-squares fit of a polynomial of the given degree through samples
/// (exact interpolation when there are degree + 1 nodes).
Coefficients fit_polynomial(const std::vector<double>& nodes,
                            const std::vector<double>& values, int degree);

/// Drops trailing coefficients with |c| <= tol * max|c|.
Coefficients trim(Coefficients coeffs, double tol);

/// Scales to unit max-norm. Returns the input unchanged if it is identically zero.
Coefficients normalize_max(Coefficients coeffs);

double evaluate(const Coefficients& coeffs, double t);
std::complex<double> evaluate(const Coefficients& coeffs, std::complex<double> t);

/// Complex roots as eigenvalues of the companion matrix, each refined by a few
/// Newton steps. The leading coefficient must be nonzero.
std::vector<std::complex<double>> companion_roots(const Coefficients& coeffs);

/// Number of distinct real roots on the whole real line from the Sturm
/// sequence sign variations at -inf and +inf.
int sturm_real_root_count(const Coefficients& coeffs);

} // namespace typrank
