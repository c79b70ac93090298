#include "dhb/boundary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dhb/fft.hpp"

namespace dhb {

BoundarySamples::BoundarySamples(std::vector<Complex> values) : values_(std::move(values)) {
    if (values_.size() < 2 || !is_power_of_two(values_.size()))
        throw std::invalid_argument("BoundarySamples: sample count must be a power of two (>= 2)");
}

Complex BoundarySamples::node(int j, int m) {
    return std::polar(1.0, 2.0 * std::numbers::pi * double(j) / double(m));
}

BoundarySamples boundary_samples(const ComplexPoly& f, int m) {
    if (m < 2 || !is_power_of_two(std::size_t(m)))
        throw std::invalid_argument("boundary_samples: M must be a power of two (>= 2)");
    // lambda^m = 1, so coefficients fold mod m; evaluation stays exact for any degree.
    std::vector<Complex> folded(std::size_t(m), Complex(0.0));
    const auto c = f.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) folded[k % std::size_t(m)] += c[k];
    ifft_inplace(folded);
    for (auto& v : folded) v *= double(m);
    return BoundarySamples(std::move(folded));
}

BoundarySamples boundary_samples(const RationalFn& f, int m) {
    if (m < 2 || !is_power_of_two(std::size_t(m)))
        throw std::invalid_argument("boundary_samples: M must be a power of two (>= 2)");
    std::vector<Complex> v(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        v[std::size_t(j)] = f(BoundarySamples::node(j, m));
        if (!std::isfinite(std::abs(v[std::size_t(j)])))
            throw std::domain_error("boundary_samples: non-finite value at node j=" +
                                    std::to_string(j));
    }
    return BoundarySamples(std::move(v));
}

ComplexPoly samples_to_coeffs(const BoundarySamples& s, int n) {
    if (n < 0) throw std::invalid_argument("samples_to_coeffs: negative degree");
    if (n >= s.size())
        throw std::invalid_argument("samples_to_coeffs: need M > N for coefficient recovery");
    std::vector<Complex> v(s.values().begin(), s.values().end());
    fft_inplace(v);
    const double inv = 1.0 / double(s.size());
    std::vector<Complex> c(std::size_t(n) + 1);
    for (int k = 0; k <= n; ++k) c[std::size_t(k)] = v[std::size_t(k)] * inv;
    return ComplexPoly(std::move(c));
}

double sup_on_circle(const RationalFn& r, int m) {
    if (m < 2 || !is_power_of_two(std::size_t(m)))
        throw std::invalid_argument("sup_on_circle: M must be a power of two (>= 2)");
    double best = 0.0;
    for (int j = 0; j < m; ++j) {
        const Complex lam = BoundarySamples::node(j, m);
        const double dv = std::abs(r.den()(lam));
        const double nv = std::abs(r.num()(lam));
        if (!(dv > 0.0) || !std::isfinite(nv / dv))
            throw std::domain_error("sup_on_circle: pole on the sample grid at node j=" +
                                    std::to_string(j));
        best = std::max(best, nv / dv);
    }
    return best;
}

}  // namespace dhb
