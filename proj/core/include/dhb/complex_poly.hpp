#pragma once

#include <complex>
#include <span>
#include <vector>

namespace dhb {

using Complex = std::complex<double>;

/// z^k by repeated multiplication (k >= 0); avoids the NaN of std::pow at 0^0.
inline Complex complex_ipow(Complex z, int k) {
    Complex p(1.0);
    for (int i = 0; i < k; ++i) p *= z;
    return p;
}

/// Truncated Taylor polynomial c_0 + c_1 z + ... + c_N z^N with coefficients at 0.
/// Evaluation is the exact finite sum; the H^2 norm is (sum |c_n|^2)^{1/2}.
class ComplexPoly {
public:
    ComplexPoly() : coeffs_(1, Complex(0.0)) {}
    explicit ComplexPoly(std::vector<Complex> coeffs);

    static ComplexPoly constant(Complex c);
    /// c * z^n
    static ComplexPoly monomial(int n, Complex c = Complex(1.0));

    int degree() const { return int(coeffs_.size()) - 1; }
    std::span<const Complex> coeffs() const { return coeffs_; }
    /// Coefficient n, zero beyond the stored degree.
    Complex coeff(int n) const;

    Complex operator()(Complex z) const;  // Horner

    ComplexPoly derivative() const;
    /// Coefficients scaled by r^n; requires 0 <= r <= 1.
    ComplexPoly dilated(double r) const;
    ComplexPoly truncated(int n) const;
    /// Drop trailing coefficients below tol * max|c|.
    ComplexPoly trimmed(double tol = 1e-14) const;

    /// Exact synthetic division: q with f(z) - f(zeta) = (z - zeta) q(z).
    ComplexPoly difference_quotient(Complex zeta) const;

    ComplexPoly operator+(const ComplexPoly& o) const;
    ComplexPoly operator-(const ComplexPoly& o) const;
    ComplexPoly operator*(const ComplexPoly& o) const;
    ComplexPoly operator*(Complex s) const;

    double max_abs_coeff() const;

private:
    std::vector<Complex> coeffs_;
};

/// sum_n f_n conj(g_n); Hermitian, positive definite.
Complex h2_inner(const ComplexPoly& f, const ComplexPoly& g);
double h2_norm_sq(const ComplexPoly& f);

/// Truncated Cauchy kernel 1/(1 - conj(w) z): coefficient n is conj(w)^n.
/// Requires |w| < 1.
ComplexPoly cauchy_kernel(Complex w, int n);

ComplexPoly dilate(const ComplexPoly& f, double r);

}  // namespace dhb
