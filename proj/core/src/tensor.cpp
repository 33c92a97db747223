#include "typrank/tensor.hpp"

#include <cmath>

#include "typrank/error.hpp"

namespace typrank {

Tensor3::Tensor3(Format format, std::vector<double> entries)
    : format_(format), entries_(std::move(entries)) {
    const auto expected = static_cast<std::size_t>(format_.m()) * format_.n() * format_.l();
    if (entries_.size() != expected)
        throw Error(ErrorKind::InvalidArgument, "tensor entry count does not match format " +
                                                    format_.to_string());
    for (double v : entries_)
        if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "non-finite tensor entry");
}

Tensor3 Tensor3::from_slices(const std::vector<Eigen::MatrixXd>& slices) {
    if (slices.empty()) throw Error(ErrorKind::InvalidArgument, "no slices");
    const int m = static_cast<int>(slices.front().rows());
    const int n = static_cast<int>(slices.front().cols());
    Format format(m, n, static_cast<int>(slices.size()));
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(m) * n * slices.size());
    for (const auto& s : slices) {
        if (s.rows() != m || s.cols() != n)
            throw Error(ErrorKind::InvalidArgument, "slices differ in shape");
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) entries.push_back(s(i, j));
    }
    return Tensor3(format, std::move(entries));
}

double Tensor3::operator()(int i, int j, int k) const {
    const int m = format_.m();
    const int n = format_.n();
    return entries_[static_cast<std::size_t>((k * m + i) * n + j)];
}

Eigen::MatrixXd Tensor3::slice(int k) const {
    if (k < 0 || k >= format_.l()) throw Error(ErrorKind::OutOfRange, "slice index");
    const int m = format_.m();
    const int n = format_.n();
    Eigen::MatrixXd out(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = (*this)(i, j, k);
    return out;
}

Tensor3 sample_gaussian_tensor(const Format& format, SeededRng& rng) {
    std::vector<double> entries(static_cast<std::size_t>(format.m()) * format.n() * format.l());
    for (double& v : entries) v = rng.normal();
    return Tensor3(format, std::move(entries));
}

} // namespace typrank
