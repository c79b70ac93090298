#pragma once

#include <vector>

#include "dhb/complex_poly.hpp"

namespace dhb {

/// Where a rational function is allowed to have denominator zeros.
/// closed_disk: none with |root| <= 1 + 1e-9 (carrier for functions that must be
/// holomorphic on a neighborhood of the closed disk);
/// open_disk:  none with |root| < 1 - 1e-9 (Smirnov-class symbols, boundary poles allowed);
/// none:       no root check (internal constructions that preserve pole locations).
enum class PoleCheck { closed_disk, open_disk, none };

class RationalFn {
public:
    RationalFn(ComplexPoly num, ComplexPoly den, PoleCheck check = PoleCheck::closed_disk);

    static RationalFn from_poly(ComplexPoly p);

    const ComplexPoly& num() const { return num_; }
    const ComplexPoly& den() const { return den_; }

    Complex operator()(Complex z) const { return num_(z) / den_(z); }

    RationalFn derivative() const;
    RationalFn dilated(double r) const;

    /// (R(z) - R(zeta))/(z - zeta) as a rational function with the removable
    /// singularity deflated exactly; no near-cancellation at z ~ zeta.
    RationalFn difference_quotient(Complex zeta) const;

    /// Roots of the denominator via companion-matrix eigenvalues.
    std::vector<Complex> den_roots() const;
    double min_den_root_modulus() const;

    bool holomorphic_on_closed_disk(double margin = 1e-9) const;
    bool pole_free_in_open_disk(double margin = 1e-9) const;

private:
    ComplexPoly num_, den_;
};

/// Roots of p via the companion matrix of the trimmed coefficient vector.
std::vector<Complex> poly_roots(const ComplexPoly& p);

/// Taylor coefficients of R at 0 through degree n (power-series long division).
/// Requires den(0) != 0.
ComplexPoly rational_to_poly(const RationalFn& r, int n);

}  // namespace dhb
