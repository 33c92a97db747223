#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "typrank/format.hpp"
#include "typrank/rng.hpp"

namespace typrank {

/// Dense real m x n x ell tensor stored slice by slice: entry (i, j, k) lives
/// at ((k * m) + i) * n + j, so each frontal slice is a contiguous row-major
/// m x n block.
class Tensor3 {
public:
    Tensor3(Format format, std::vector<double> entries);

    static Tensor3 from_slices(const std::vector<Eigen::MatrixXd>& slices);

    const Format& format() const noexcept { return format_; }
    std::span<const double> entries() const noexcept { return entries_; }

    double operator()(int i, int j, int k) const;
    Eigen::MatrixXd slice(int k) const;

private:
    Format format_;
    std::vector<double> entries_;
};

Tensor3 sample_gaussian_tensor(const Format& format, SeededRng& rng);

} // namespace typrank
