#include "dhb/complex_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dhb {

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, Complex(0.0));
}

ComplexPoly ComplexPoly::constant(Complex c) { return ComplexPoly({c}); }

ComplexPoly ComplexPoly::monomial(int n, Complex c) {
    if (n < 0) throw std::invalid_argument("ComplexPoly::monomial: negative exponent");
    std::vector<Complex> v(std::size_t(n) + 1, Complex(0.0));
    v.back() = c;
    return ComplexPoly(std::move(v));
}

Complex ComplexPoly::coeff(int n) const {
    if (n < 0 || n >= int(coeffs_.size())) return Complex(0.0);
    return coeffs_[std::size_t(n)];
}

Complex ComplexPoly::operator()(Complex z) const {
    Complex acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexPoly ComplexPoly::derivative() const {
    if (coeffs_.size() == 1) return ComplexPoly();
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = double(n) * coeffs_[n];
    return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::dilated(double r) const {
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("dilate: r must lie in [0,1]");
    std::vector<Complex> d(coeffs_.size());
    double rn = 1.0;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        d[n] = coeffs_[n] * rn;
        rn *= r;
    }
    return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::truncated(int n) const {
    if (n < 0) throw std::invalid_argument("truncated: negative degree");
    std::vector<Complex> d(coeffs_.begin(),
                           coeffs_.begin() + std::min(coeffs_.size(), std::size_t(n) + 1));
    d.resize(std::size_t(n) + 1, Complex(0.0));
    return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::trimmed(double tol) const {
    const double cutoff = tol * max_abs_coeff();
    std::size_t last = coeffs_.size();
    while (last > 1 && std::abs(coeffs_[last - 1]) <= cutoff) --last;
    return ComplexPoly(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + last));
}

ComplexPoly ComplexPoly::difference_quotient(Complex zeta) const {
    if (coeffs_.size() == 1) return ComplexPoly();
    // Horner/synthetic division run from the top; remainder (= f(zeta)) is discarded.
    std::vector<Complex> q(coeffs_.size() - 1);
    Complex carry = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
        q[k] = carry;
        carry = coeffs_[k] + zeta * carry;
    }
    return ComplexPoly(std::move(q));
}

ComplexPoly ComplexPoly::operator+(const ComplexPoly& o) const {
    std::vector<Complex> r(std::max(coeffs_.size(), o.coeffs_.size()), Complex(0.0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return ComplexPoly(std::move(r));
}

ComplexPoly ComplexPoly::operator-(const ComplexPoly& o) const {
    std::vector<Complex> r(std::max(coeffs_.size(), o.coeffs_.size()), Complex(0.0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
    return ComplexPoly(std::move(r));
}

ComplexPoly ComplexPoly::operator*(const ComplexPoly& o) const {
    std::vector<Complex> r(coeffs_.size() + o.coeffs_.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return ComplexPoly(std::move(r));
}

ComplexPoly ComplexPoly::operator*(Complex s) const {
    std::vector<Complex> r(coeffs_);
    for (auto& c : r) c *= s;
    return ComplexPoly(std::move(r));
}

double ComplexPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Complex h2_inner(const ComplexPoly& f, const ComplexPoly& g) {
    const std::size_t n = std::min(f.coeffs().size(), g.coeffs().size());
    Complex s(0.0);
    for (std::size_t k = 0; k < n; ++k) s += f.coeffs()[k] * std::conj(g.coeffs()[k]);
    return s;
}

double h2_norm_sq(const ComplexPoly& f) {
    double s = 0.0;
    for (const auto& c : f.coeffs()) s += std::norm(c);
    return s;
}

ComplexPoly cauchy_kernel(Complex w, int n) {
    if (!(std::abs(w) < 1.0)) throw std::invalid_argument("cauchy_kernel: |w| must be < 1");
    if (n < 0) throw std::invalid_argument("cauchy_kernel: negative truncation degree");
    std::vector<Complex> c(std::size_t(n) + 1);
    Complex p(1.0);
    const Complex wc = std::conj(w);
    for (int k = 0; k <= n; ++k) {
        c[std::size_t(k)] = p;
        p *= wc;
    }
    return ComplexPoly(std::move(c));
}

ComplexPoly dilate(const ComplexPoly& f, double r) { return f.dilated(r); }

}  // namespace dhb
