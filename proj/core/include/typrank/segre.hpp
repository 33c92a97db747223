#pragma once

#include <cstdint>

namespace typrank {

/// Combinatorial data attached to the Segre variety of rank-one m x n matrices.
struct SegreInfo {
    int m = 0;
    int n = 0;
    int dim = 0;           ///< m + n - 2
    int codim = 0;         ///< (m-1)(n-1)
    std::uint64_t degree = 0;
    bool degree_odd = false;
    std::uint64_t alpha = 0;
};

/// Exact binomial coefficient. Throws Error(OutOfRange) when n > 64 or the
/// value does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

/// binom(m+n-2, m-1). Requires 2 <= m <= n and m+n-2 <= 64.
std::uint64_t segre_degree(int m, int n);

/// Degree parity through Lucas' theorem: binom(a, b) is odd iff every binary
/// digit set in b is also set in a. Returns true when the degree is odd.
bool degree_parity_lucas(int m, int n);

/// Number of real intersection points of the conjugate-pair special slice.
std::uint64_t alpha(int m, int n);

SegreInfo segre_info(int m, int n);

/// Expected number of real points of a uniform complementary-dimension linear
/// section: sqrt(pi) Gamma((m+n-1)/2) / (Gamma(m/2) Gamma(n/2)).
double expected_intersections(int m, int n);

/// The same expectation for m = 2 * half_m + 1 as the finite product
/// prod_{i<half_m} (n/2 + i) / (1/2 + i).
double expected_intersections_odd_product(int half_m, int n);

/// k!! with 0!! = (-1)!! = 1.
double double_factorial(int k);

/// Leading constant c in E ~ c * n^((m-1)/2): 1/(m-2)!! for odd m,
/// sqrt(pi/2)/(m-2)!! for even m.
double asymptotic_coefficient(int m);

/// expected_intersections(m, n) / (c * n^((m-1)/2)).
double asymptotic_ratio(int m, int n);

} // namespace typrank
