#pragma once

#include "dhb/boundary.hpp"
#include "dhb/rational_fn.hpp"

namespace dhb {

/// A pair (b, a): a outer with a(0) > 0, |a|^2 + |b|^2 = 1 on the circle, and
/// b/a equal to the Smirnov-class symbol phi. Holds boundary samples on an
/// M-point grid and Taylor coefficients through degree N.
class PairBA {
public:
    /// Spectral-factorization construction. With phi = num/den (no poles in the
    /// open disk; boundary poles allowed), |a|^2 = |den|^2 / (|den|^2 + |num|^2)
    /// on the circle. The outer factor G with |G|^2 = 1/(|den|^2 + |num|^2) is
    /// built by exponentiating the analytic completion of the log-modulus
    /// (negative frequencies dropped, zero mode kept once), then a = den G,
    /// b = num G, and a unimodular factor makes a(0) > 0.
    static PairBA from_phi(const RationalFn& phi, int m = 4096, int n = 128);

    /// Closed form for phi(z) = z / (1 - conj(zeta) z), |zeta| <= 1:
    /// b = z / (A - B z), a = (1 - conj(zeta) z) / (A - B z) with
    /// A = ((2 + |zeta|^2 + sqrt(4 + |zeta|^4)) / 2)^{1/2} and B = conj(zeta)/A
    /// (the 0/0 phase at zeta = 0 resolves to B = 0).
    static PairBA closed_form(Complex zeta, int m = 4096, int n = 128);

    const ComplexPoly& a() const { return a_; }
    const ComplexPoly& b() const { return b_; }
    const BoundarySamples& a_samples() const { return a_samples_; }
    const BoundarySamples& b_samples() const { return b_samples_; }
    const RationalFn& phi() const { return phi_; }
    int grid_size() const { return a_samples_.size(); }
    int truncation() const { return a_.degree(); }
    double a0() const { return std::real(a_.coeff(0)); }

    /// max_j | |a(lambda_j)|^2 + |b(lambda_j)|^2 - 1 |
    double pair_identity_residual() const;
    /// max_j |b den_phi - a num_phi| / (1 + |num_phi| + |den_phi|)  (b/a = phi, cross-multiplied)
    double symbol_residual() const;
    /// max_j |b(lambda_j)|
    double sup_b() const;

private:
    PairBA(ComplexPoly a, ComplexPoly b, BoundarySamples as, BoundarySamples bs, RationalFn phi);
    void validate() const;

    ComplexPoly a_, b_;
    BoundarySamples a_samples_, b_samples_;
    RationalFn phi_;
};

/// Constants of the closed-form pair: A > 0 and B = conj(zeta)/A.
struct PairConstants {
    double a;   // A > 0
    Complex b;  // B = conj(zeta)/A
};
PairConstants pair_constants(Complex zeta);

/// (T_conj(h) f)_k = sum_{j >= 0} conj(h_j) f_{k+j}, truncated at degree n.
ComplexPoly toeplitz_conj_apply(const ComplexPoly& h, const ComplexPoly& f, int n);

/// Solve T_conj(a) g = T_conj(b) f for g on coefficients 0..n by back
/// substitution (the system is upper triangular with diagonal a(0) > 0).
ComplexPoly f_plus(const ComplexPoly& f, const PairBA& pair, int n);

/// ||f||^2_{H^2} + ||f^+||^2_{H^2}.
double hb_norm_sq(const ComplexPoly& f, const PairBA& pair);

/// k_w^b(z) = (1 - conj(b(w)) b(z)) / (1 - conj(w) z), |w|, |z| < 1.
Complex hb_kernel(const PairBA& pair, Complex w, Complex z);

struct NonextremeResult {
    bool nonextreme = false;
    double log_integral = 0.0;  // trimmed mean of log(1 - |b|^2) at the finer grid
    int excluded = 0;           // samples with 1 - |b|^2 below the trim threshold (finer grid)
    bool stable = false;        // trimmed mean stable under doubling M
};

/// Numerical test of log(1 - |b|^2) in L^1 of the circle: trimmed grid means at
/// M and 2M points. A heuristic, not a proof.
NonextremeResult is_nonextreme(const ComplexPoly& b, int m);
NonextremeResult is_nonextreme(const PairBA& pair, int m);

enum class InnerFactorZ { yes, no, indeterminate };

/// Heuristic check that the inner factor of b is exactly z: b(0) = 0, the
/// deflated b/z does not vanish at 0, and |b(z)/z| stays above 1e-8 on the
/// grid. Reports indeterminate rather than no when the minimum is merely small.
InnerFactorZ inner_factor_is_z_check(const PairBA& pair, std::span<const Complex> grid);
InnerFactorZ inner_factor_is_z_check(const ComplexPoly& b, std::span<const Complex> grid);

std::vector<Complex> default_inner_factor_grid();

}  // namespace dhb
