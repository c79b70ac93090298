#pragma once

#include "dhb/boundary.hpp"
#include "dhb/weights.hpp"

namespace dhb {

enum class DirichletMethod { area_quadrature, douglas_boundary, measure_average };

struct DirichletValue {
    double value = 0.0;
    DirichletMethod method = DirichletMethod::area_quadrature;
    int skipped_nodes = 0;  // sampled-weight nodes dropped as non-finite
};

const char* to_string(DirichletMethod m);

/// int |f'(z)|^2 w(z) dA(z). Atomic weights are integrated atom by atom with the
/// angular grid rotated to put the atom's ray mid-step between nodes, and (for
/// interior atoms) the radial rule split at |zeta| where the profile has a kink.
DirichletValue dirichlet_area(const ComplexPoly& f, const Weight& w, const DiskRule& rule);
DirichletValue dirichlet_area(const RationalFn& f, const Weight& w, const DiskRule& rule);

/// Boundary form of the local Dirichlet integral at zeta in the closed disk:
/// mean over the circle of |(f(lambda) - f(zeta)) / (lambda - zeta)|^2, with the
/// difference quotient deflated exactly (no cancellation for lambda near zeta).
DirichletValue local_dirichlet(const ComplexPoly& f, Complex zeta, int m);
DirichletValue local_dirichlet(const RationalFn& f, Complex zeta, int m);

/// sum_k mass_k * local_dirichlet(f, zeta_k).
DirichletValue dirichlet_measure(const ComplexPoly& f, const AtomicMeasure& mu, int m);
DirichletValue dirichlet_measure(const RationalFn& f, const AtomicMeasure& mu, int m);

/// ||f||^2_{H^2} + D_w(f).
double dnorm_sq(const ComplexPoly& f, const Weight& w, const DiskRule& rule);
double dnorm_sq(const RationalFn& f, const Weight& w, const DiskRule& rule);

/// ||f||^2_{H^2} for the rational carrier via the boundary mean of |f|^2.
double h2_norm_sq(const RationalFn& f, int m = 4096);

/// D(f_r)/D(f) with numerator and denominator evaluated by the same method.
/// Requires 0 <= r <= 1 - 1e-6 and D(f) > 0.
double dilation_ratio(const ComplexPoly& f, const AtomicMeasure& mu, double r, int m);
double dilation_ratio(const RationalFn& f, const AtomicMeasure& mu, double r, int m);
double dilation_ratio(const ComplexPoly& f, const Weight& w, double r, const DiskRule& rule);

}  // namespace dhb
