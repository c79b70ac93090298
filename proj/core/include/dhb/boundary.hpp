#pragma once

#include <vector>

#include "dhb/complex_poly.hpp"
#include "dhb/rational_fn.hpp"

namespace dhb {

/// Values on the uniform boundary grid lambda_j = e^{2 pi i j / M}, M a power of two.
class BoundarySamples {
public:
    explicit BoundarySamples(std::vector<Complex> values);

    int size() const { return int(values_.size()); }
    std::span<const Complex> values() const { return values_; }
    Complex operator[](int j) const { return values_[std::size_t(j)]; }

    static Complex node(int j, int m);

private:
    std::vector<Complex> values_;
};

BoundarySamples boundary_samples(const ComplexPoly& f, int m);
/// Pointwise evaluation; throws if a sample is not finite (pole on the grid).
BoundarySamples boundary_samples(const RationalFn& f, int m);

/// Taylor coefficients 0..n recovered by the discrete Fourier transform.
/// Exact for polynomials of degree <= n when m > n.
ComplexPoly samples_to_coeffs(const BoundarySamples& s, int n);

/// max_j |R(lambda_j)| over the m-point grid; nondecreasing as m doubles.
double sup_on_circle(const RationalFn& r, int m);

}  // namespace dhb
