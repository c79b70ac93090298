#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "dhb/disk_rule.hpp"

namespace dhb {

struct Atom {
    Complex zeta;  // point in the closed disk
    double mass;   // > 0
};

/// Finite positive atomic measure on the closed disk.
class AtomicMeasure {
public:
    explicit AtomicMeasure(std::vector<Atom> atoms);
    static AtomicMeasure dirac(Complex zeta, double mass = 1.0);

    std::span<const Atom> atoms() const { return atoms_; }
    double total_mass() const;

private:
    std::vector<Atom> atoms_;
};

struct SignedAtom {
    Complex zeta;
    double mass;  // nonzero, either sign
};

class SignedAtomicMeasure {
public:
    explicit SignedAtomicMeasure(std::vector<SignedAtom> atoms);

    std::span<const SignedAtom> atoms() const { return atoms_; }
    double total_mass() const;

private:
    std::vector<SignedAtom> atoms_;
};

/// Atoms with |zeta| above this are treated as boundary atoms (Poisson part).
inline constexpr double kBoundaryAtomTol = 1e-12;

/// Superharmonic weight given by its representing measure, a power weight
/// (1-|z|^2)^alpha with alpha in [0,1], or a user-supplied sampled weight.
class Weight {
public:
    enum class Kind { atomic, power, sampled };

    static Weight superharmonic(AtomicMeasure mu);
    static Weight power(double alpha);
    static Weight sampled(std::function<double(Complex)> eval);

    Kind kind() const { return kind_; }
    const AtomicMeasure& measure() const;
    double alpha() const;

    /// Pointwise value on the open disk; +infinity at an interior atom.
    double operator()(Complex z) const;

private:
    Weight(Kind k) : kind_(k) {}
    Kind kind_;
    std::shared_ptr<const AtomicMeasure> mu_;
    double alpha_ = 0.0;
    std::function<double(Complex)> eval_;
};

double eval_weight(const Weight& w, Complex z);

/// Integral of the weight against normalized area measure. Atomic weights are
/// integrated per atom by exact angular integration and a radial Gauss rule
/// (the 2-D tensor rule cannot reach the required accuracy near boundary
/// atoms); power weights by a radial rule with a substitution that removes the
/// (1-r^2)^alpha endpoint singularity; sampled weights by the given disk rule.
double l1_norm(const Weight& w, const DiskRule& rule);

/// k-th angular Fourier coefficient a_k(r) of the unit-mass atom weight at zeta,
/// i.e. omega_zeta(r e^{i theta}) = sum_k a_k(r) e^{ik(theta - arg zeta)} ... with
/// phases folded in: this returns the coefficient of e^{ik theta}.
Complex atom_angular_coefficient(Complex zeta, int k, double r);

/// max over 0<=n<=n_max, 0<=m<=m_max of
/// | mu(D) * sum_k m_k zeta_k^n conj(zeta_k)^m - (sum_k m_k zeta_k^n)(sum_k m_k conj(zeta_k)^m) |.
/// Zero exactly (for atom lists) iff the measure is a multiple of a Dirac.
double moment_residual(const SignedAtomicMeasure& mu, int m_max, int n_max);
double moment_residual_at(const SignedAtomicMeasure& mu, int n, int m);

}  // namespace dhb
