#include "dhb/rational_fn.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dhb {

std::vector<Complex> poly_roots(const ComplexPoly& p) {
    const ComplexPoly t = p.trimmed();
    const int d = t.degree();
    if (d == 0) return {};
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
    const Complex lead = t.coeff(d);
    for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) c(i, d - 1) = -t.coeff(i) / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, /*computeEigenvectors=*/false);
    std::vector<Complex> roots(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) roots[std::size_t(i)] = es.eigenvalues()(i);
    return roots;
}

RationalFn::RationalFn(ComplexPoly num, ComplexPoly den, PoleCheck check)
    : num_(std::move(num)), den_(std::move(den)) {
    if (std::abs(den_(Complex(0.0))) < 1e-14 * std::max(1.0, den_.max_abs_coeff()))
        throw std::invalid_argument("RationalFn: den(0) must be nonzero");
    if (check == PoleCheck::closed_disk && !holomorphic_on_closed_disk())
        throw std::domain_error("RationalFn: denominator zero inside the closed unit disk");
    if (check == PoleCheck::open_disk && !pole_free_in_open_disk())
        throw std::domain_error("RationalFn: denominator zero inside the open unit disk");
}

RationalFn RationalFn::from_poly(ComplexPoly p) {
    return RationalFn(std::move(p), ComplexPoly::constant(1.0), PoleCheck::none);
}

RationalFn RationalFn::derivative() const {
    // (n' d - n d') / d^2; pole set unchanged
    ComplexPoly n = num_.derivative() * den_ - num_ * den_.derivative();
    return RationalFn(std::move(n), den_ * den_, PoleCheck::none);
}

RationalFn RationalFn::dilated(double r) const {
    return RationalFn(num_.dilated(r), den_.dilated(r), PoleCheck::none);
}

RationalFn RationalFn::difference_quotient(Complex zeta) const {
    const Complex dz = den_(zeta);
    if (!std::isfinite(std::abs(dz)) || std::abs(dz) == 0.0)
        throw std::domain_error("difference_quotient: function not finite at zeta");
    // p(z) = num(z) den(zeta) - num(zeta) den(z) vanishes at zeta; deflate exactly.
    ComplexPoly p = num_ * dz - den_ * num_(zeta);
    ComplexPoly q = p.difference_quotient(zeta);
    return RationalFn(std::move(q), den_ * dz, PoleCheck::none);
}

std::vector<Complex> RationalFn::den_roots() const { return poly_roots(den_); }

double RationalFn::min_den_root_modulus() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& z : den_roots()) m = std::min(m, std::abs(z));
    return m;
}

bool RationalFn::holomorphic_on_closed_disk(double margin) const {
    return min_den_root_modulus() > 1.0 + margin;
}

bool RationalFn::pole_free_in_open_disk(double margin) const {
    return min_den_root_modulus() >= 1.0 - margin;
}

ComplexPoly rational_to_poly(const RationalFn& r, int n) {
    if (n < 0) throw std::invalid_argument("rational_to_poly: negative degree");
    const auto& num = r.num();
    const auto& den = r.den();
    const Complex d0 = den.coeff(0);
    if (std::abs(d0) == 0.0) throw std::invalid_argument("rational_to_poly: den(0) = 0");
    std::vector<Complex> c(std::size_t(n) + 1, Complex(0.0));
    for (int k = 0; k <= n; ++k) {
        Complex s = num.coeff(k);
        const int jmax = std::min(k, den.degree());
        for (int j = 1; j <= jmax; ++j) s -= den.coeff(j) * c[std::size_t(k - j)];
        c[std::size_t(k)] = s / d0;
    }
    return ComplexPoly(std::move(c));
}

}  // namespace dhb
