#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dhb/complex_poly.hpp"

namespace dhb {

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Tensor rule for the normalized area measure on the unit disk (total mass 1):
/// Gauss-Legendre radial nodes in (0, 1) against the density 2r dr, and a uniform
/// angular grid offset by half a step, theta_j = offset + 2 pi (j + 1/2) / n_theta.
/// No node lies at r = 0, r = 1, or (after a per-pole rotation) on a singular ray,
/// so integrable log and Poisson-type integrands are finite at every node.
class DiskRule {
public:
    DiskRule(int n_r, int n_theta);
    static DiskRule make(int n_r, int n_theta) { return DiskRule(n_r, n_theta); }

    int n_radial() const { return int(radial_nodes_.size()); }
    int n_theta() const { return n_theta_; }
    double theta_offset() const { return theta_offset_; }
    std::span<const double> radial_nodes() const { return radial_nodes_; }
    /// Radial weights include the 2r density: sum_i w_i h(r_i) ~ int_0^1 h(r) 2r dr.
    std::span<const double> radial_weights() const { return radial_weights_; }

    double theta(int j) const;
    double total_mass() const;

    /// Same radial rule, angular grid rotated by phi.
    DiskRule rotated(double phi) const;
    /// Radial integral split at s in (0,1), Gauss-Legendre on each piece
    /// (for integrands with a circular kink at |z| = s).
    DiskRule with_radial_split(double s) const;

private:
    DiskRule() = default;
    std::vector<double> radial_nodes_, radial_weights_;
    int n_theta_ = 0;
    double theta_offset_ = 0.0;
};

/// Weighted node sum; deterministic pairwise accumulation.
/// Throws std::domain_error with the node location if the integrand is not finite there.
Complex integrate_disk(const std::function<Complex(Complex)>& g, const DiskRule& rule);
double integrate_disk_real(const std::function<double(Complex)>& g, const DiskRule& rule);

/// As integrate_disk_real but non-finite nodes are dropped and counted instead.
double integrate_disk_skip_nonfinite(const std::function<double(Complex)>& g,
                                     const DiskRule& rule, int& skipped);

/// Mean of g over the m roots of unity (trapezoid on the circle; spectrally
/// accurate for integrands analytic in an annulus around the circle).
Complex integrate_circle(const std::function<Complex(Complex)>& g, int m);

}  // namespace dhb
