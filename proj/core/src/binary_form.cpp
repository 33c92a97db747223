#include "typrank/binary_form.hpp"

#include <algorithm>
#include <cmath>

#include "typrank/error.hpp"
#include "typrank/polynomial.hpp"

namespace typrank {

namespace {

constexpr double kVanishing = 1e-14;
constexpr double kSameRoot = 1e-9;

Eigen::Vector2d projective_point(double x0, double x1) {
    Eigen::Vector2d p(x0, x1);
    p.normalize();
    const double lead = std::abs(p(0)) > 1e-15 ? p(0) : p(1);
    if (lead < 0) p = -p;
    return p;
}

} // namespace

BinaryForm::BinaryForm(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "binary form needs coefficients");
}

double BinaryForm::operator()(double x0, double x1) const {
    const int d = degree();
    double acc = 0.0;
    for (int i = 0; i <= d; ++i)
        acc += coeffs_[static_cast<std::size_t>(i)] * std::pow(x0, d - i) * std::pow(x1, i);
    return acc;
}

BinaryForm BinaryForm::normalized() const { return BinaryForm(normalize_max(coeffs_)); }

BinaryRoots real_roots_binary_form(const BinaryForm& form, double tau) {
    std::vector<double> c = form.normalized().coefficients();
    if (std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; }))
        throw Error(ErrorKind::DegenerateSystem, "binary form is identically zero");

    BinaryRoots out;
    bool root_at_x1_zero = false; // [1:0]
    bool root_at_x0_zero = false; // [0:1]
    while (c.size() > 1 && std::abs(c.front()) <= kVanishing && std::abs(c.back()) <= kVanishing) {
        root_at_x1_zero = root_at_x0_zero = true;
        c.erase(c.begin());
        c.pop_back();
        c = normalize_max(std::move(c));
    }
    if (c.size() > 1) {
        // Dehomogenize in the chart whose leading coefficient is larger, so a
        // (near) degree drop shows up as a root near zero instead of infinity.
        const bool reversed = std::abs(c.front()) > std::abs(c.back());
        Coefficients q = c;
        if (reversed) std::reverse(q.begin(), q.end());

        std::vector<double> real_parts;
        for (const auto& z : companion_roots(q)) {
            const double ratio = std::abs(z.imag()) / (1.0 + std::abs(z.real()));
            if (ratio <= tau / 10.0) {
                real_parts.push_back(z.real());
            } else if (ratio < 10.0 * tau) {
                throw Error(ErrorKind::AmbiguousRoots,
                            "root with imag/(1+|real|) = " + std::to_string(ratio));
            }
        }
        std::sort(real_parts.begin(), real_parts.end());
        std::vector<double> distinct;
        for (double r : real_parts)
            if (distinct.empty() || std::abs(r - distinct.back()) > kSameRoot * (1.0 + std::abs(r)))
                distinct.push_back(r);

        const int sturm = sturm_real_root_count(q);
        if (sturm != static_cast<int>(distinct.size()))
            throw Error(ErrorKind::AmbiguousRoots,
                        "companion count " + std::to_string(distinct.size()) +
                            " disagrees with Sturm count " + std::to_string(sturm));
        for (double r : distinct)
            out.roots.push_back(reversed ? projective_point(r, 1.0) : projective_point(1.0, r));
    }
    if (root_at_x1_zero) out.roots.push_back(projective_point(1.0, 0.0));
    if (root_at_x0_zero) out.roots.push_back(projective_point(0.0, 1.0));
    out.count = static_cast<int>(out.roots.size());
    return out;
}

} // namespace typrank
