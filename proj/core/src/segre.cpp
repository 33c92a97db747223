#include "typrank/segre.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "typrank/error.hpp"

namespace typrank {

namespace {

void require_shape(int m, int n) {
    if (m < 2 || m > n)
        throw Error(ErrorKind::InvalidArgument, "expected 2 <= m <= n, got m=" + std::to_string(m) +
                                                    " n=" + std::to_string(n));
}

} // namespace

std::uint64_t binomial(int n, int k) {
    if (n < 0 || n > 64) throw Error(ErrorKind::OutOfRange, "binomial: n outside [0, 64]");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (result > std::numeric_limits<std::uint64_t>::max())
            throw Error(ErrorKind::OutOfRange, "binomial: value exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t segre_degree(int m, int n) {
    require_shape(m, n);
    if (m + n - 2 > 64) throw Error(ErrorKind::OutOfRange, "segre_degree: m + n - 2 > 64");
    return binomial(m + n - 2, m - 1);
}

bool degree_parity_lucas(int m, int n) {
    require_shape(m, n);
    const auto top = static_cast<unsigned>(m + n - 2);
    const auto bottom = static_cast<unsigned>(m - 1);
    return (top & bottom) == bottom;
}

std::uint64_t alpha(int m, int n) {
    require_shape(m, n);
    const bool m_odd = m % 2 == 1;
    const bool n_odd = n % 2 == 1;
    if (!m_odd && !n_odd) return 0;
    if (m_odd && !n_odd) return binomial((m + n - 3) / 2, (m - 1) / 2);
    if (!m_odd && n_odd) return binomial((m + n - 3) / 2, (m - 2) / 2);
    return binomial((m + n - 2) / 2, (m - 1) / 2);
}

SegreInfo segre_info(int m, int n) {
    SegreInfo info;
    info.m = m;
    info.n = n;
    info.dim = m + n - 2;
    info.codim = (m - 1) * (n - 1);
    info.degree = segre_degree(m, n);
    info.degree_odd = degree_parity_lucas(m, n);
    info.alpha = alpha(m, n);
    return info;
}

double expected_intersections(int m, int n) {
    if (m < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "expected_intersections: m, n >= 1");
    const double log_value = 0.5 * std::log(std::numbers::pi) + std::lgamma(0.5 * (m + n - 1)) -
                             std::lgamma(0.5 * m) - std::lgamma(0.5 * n);
    return std::exp(log_value);
}

double expected_intersections_odd_product(int half_m, int n) {
    if (half_m < 1 || n < 1)
        throw Error(ErrorKind::InvalidArgument, "odd product needs half_m >= 1 and n >= 1");
    double value = 1.0;
    for (int i = 0; i < half_m; ++i) value *= (0.5 * n + i) / (0.5 + i);
    return value;
}

double double_factorial(int k) {
    double value = 1.0;
    for (int i = k; i > 1; i -= 2) value *= i;
    return value;
}

double asymptotic_coefficient(int m) {
    if (m < 2) throw Error(ErrorKind::InvalidArgument, "asymptotic_coefficient: m >= 2");
    const double base = 1.0 / double_factorial(m - 2);
    return m % 2 == 1 ? base : std::sqrt(std::numbers::pi / 2.0) * base;
}

double asymptotic_ratio(int m, int n) {
    return expected_intersections(m, n) /
           (asymptotic_coefficient(m) * std::pow(static_cast<double>(n), 0.5 * (m - 1)));
}

} // namespace typrank
