#pragma once

#include <vector>

#include "dhb/weights.hpp"

namespace dhb {

/// Two-index moment table W[n][m] = int w(v) v^m conj(v)^n dA(v), 0 <= n,m <= order.
/// Atomic weights: per-atom exact angular integration, radial Gauss rule on the
/// pieces (0,|zeta|), (|zeta|,1); the radial integrands are polynomial, so the
/// rule is exact once it has order+2 points per piece. Power weights: diagonal,
/// radial rule with the singularity-removing substitution. The table drives
/// the Bergman projection and Berezin transform without any 2-D quadrature
/// near weight singularities.
class WeightMoments {
public:
    WeightMoments(const Weight& w, const DiskRule& rule, int order = 256);

    int order() const { return order_; }
    Complex moment(int n, int m) const;

    /// Taylor coefficients of Q w: coefficient m is (m+1) W[m][0].
    ComplexPoly bergman_taylor() const;
    Complex bergman_at(Complex z) const;
    double berezin_at(Complex z) const;

private:
    int order_;
    std::vector<Complex> w_;  // (order+1)^2 row-major, Hermitian
};

/// Q w(z) = int w(v) / (1 - conj(v) z)^2 dA(v). Sampled weights use the disk
/// rule directly; atomic and power weights go through the moment table.
Complex bergman_projection(const Weight& w, Complex z, const DiskRule& rule, int order = 256);

/// B w(z) = (1 - |z|^2)^2 int w(v) / |1 - conj(v) z|^4 dA(v).
double berezin(const Weight& w, Complex z, const DiskRule& rule, int order = 256);

/// max over the grid of | (1 - |z|^2) |Q w(z)|^2 - B w(z) |.
double qb_residual(const Weight& w, std::span<const Complex> grid, const DiskRule& rule,
                   int order = 256);

/// 15 radii x 16 angles, |z| <= 0.9.
std::vector<Complex> default_qb_grid();

}  // namespace dhb
