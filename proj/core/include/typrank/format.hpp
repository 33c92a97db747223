#pragma once

#include <string>
#include <string_view>

namespace typrank {

/// Position of a tensor length ell relative to the Segre thresholds of m x n.
enum class Regime {
    SubBoundary, ///< ell < (m-1)(n-1)+1
    Boundary,    ///< ell == (m-1)(n-1)+1
    Mid,         ///< (m-1)(n-1)+1 < ell <= (m-1)n
    Tall,        ///< (m-1)n < ell < mn
    Full,        ///< ell >= mn
};

std::string_view to_string(Regime regime);

Regime classify_regime(int m, int n, int l);

/// An m x n x ell tensor shape with 2 <= m <= n <= ell.
class Format {
public:
    /// Throws Error(InvalidArgument) unless 2 <= m <= n <= l.
    Format(int m, int n, int l);

    /// Parses "MxNxL" (also accepts 'X').
    static Format parse(std::string_view text);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int l() const noexcept { return l_; }
    Regime regime() const noexcept { return regime_; }

    int matrix_size() const noexcept { return m_ * n_; }
    int boundary_length() const noexcept { return (m_ - 1) * (n_ - 1) + 1; }
    /// mn - ell, the dimension of the orthogonal complement of the slice span
    /// (zero when ell >= mn).
    int complement_dim() const noexcept { return l_ >= m_ * n_ ? 0 : m_ * n_ - l_; }

    std::string to_string() const;

    friend bool operator==(const Format&, const Format&) = default;

private:
    int m_;
    int n_;
    int l_;
    Regime regime_;
};

} // namespace typrank
