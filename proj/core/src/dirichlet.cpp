#include "dhb/dirichlet.hpp"

#include <cmath>
#include <stdexcept>

#include "dhb/summation.hpp"

namespace dhb {

const char* to_string(DirichletMethod m) {
    switch (m) {
        case DirichletMethod::area_quadrature: return "area-quadrature";
        case DirichletMethod::douglas_boundary: return "douglas-boundary";
        case DirichletMethod::measure_average: return "measure-average";
    }
    return "?";
}

namespace {

bool is_boundary_point(Complex zeta) { return std::abs(zeta) > 1.0 - kBoundaryAtomTol; }

// Unit-mass atom weight evaluated pointwise (finite at every rule node by construction).
double atom_weight_value(Complex zeta, Complex z) {
    if (is_boundary_point(zeta)) return (1.0 - std::norm(z)) / std::norm(zeta - z);
    const double s2 = std::norm(zeta);
    return 2.0 / (1.0 - s2) * std::log(std::abs((1.0 - std::conj(zeta) * z) / (zeta - z)));
}

template <typename FPrimeSq>
DirichletValue area_impl(FPrimeSq&& fp2, const Weight& w, const DiskRule& rule) {
    DirichletValue out;
    out.method = DirichletMethod::area_quadrature;
    switch (w.kind()) {
        case Weight::Kind::atomic: {
            std::vector<double> per_atom;
            for (const auto& atom : w.measure().atoms()) {
                DiskRule r = rule.rotated(std::arg(atom.zeta));
                const double s = std::abs(atom.zeta);
                if (!is_boundary_point(atom.zeta) && s > 1e-12) r = r.with_radial_split(s);
                const double v = integrate_disk_real(
                    [&](Complex z) { return fp2(z) * atom_weight_value(atom.zeta, z); }, r);
                per_atom.push_back(atom.mass * v);
            }
            out.value = pairwise_sum(std::span<const double>(per_atom));
            return out;
        }
        case Weight::Kind::power: {
            out.value =
                integrate_disk_real([&](Complex z) { return fp2(z) * w(z); }, rule);
            return out;
        }
        case Weight::Kind::sampled: {
            out.value = integrate_disk_skip_nonfinite(
                [&](Complex z) { return fp2(z) * w(z); }, rule, out.skipped_nodes);
            return out;
        }
    }
    return out;
}

}  // namespace

DirichletValue dirichlet_area(const ComplexPoly& f, const Weight& w, const DiskRule& rule) {
    const ComplexPoly d = f.derivative();
    return area_impl([&](Complex z) { return std::norm(d(z)); }, w, rule);
}

DirichletValue dirichlet_area(const RationalFn& f, const Weight& w, const DiskRule& rule) {
    if (!f.holomorphic_on_closed_disk())
        throw std::domain_error("dirichlet_area: f must be holomorphic on the closed disk");
    const RationalFn d = f.derivative();
    return area_impl([&](Complex z) { return std::norm(d(z)); }, w, rule);
}

namespace {

void check_zeta(Complex zeta) {
    if (std::abs(zeta) > 1.0 + kBoundaryAtomTol)
        throw std::invalid_argument("local_dirichlet: zeta must lie in the closed disk");
}

}  // namespace

DirichletValue local_dirichlet(const ComplexPoly& f, Complex zeta, int m) {
    check_zeta(zeta);
    const ComplexPoly q = f.difference_quotient(zeta);
    const Complex v = integrate_circle([&](Complex lam) { return Complex(std::norm(q(lam))); }, m);
    return {std::real(v), DirichletMethod::douglas_boundary, 0};
}

DirichletValue local_dirichlet(const RationalFn& f, Complex zeta, int m) {
    check_zeta(zeta);
    if (!f.holomorphic_on_closed_disk())
        throw std::domain_error("local_dirichlet: f must be holomorphic on the closed disk");
    const RationalFn q = f.difference_quotient(zeta);
    const Complex v = integrate_circle([&](Complex lam) { return Complex(std::norm(q(lam))); }, m);
    return {std::real(v), DirichletMethod::douglas_boundary, 0};
}

namespace {

template <typename F>
DirichletValue measure_impl(const F& f, const AtomicMeasure& mu, int m) {
    std::vector<double> terms;
    for (const auto& a : mu.atoms()) terms.push_back(a.mass * local_dirichlet(f, a.zeta, m).value);
    return {pairwise_sum(std::span<const double>(terms)), DirichletMethod::measure_average, 0};
}

}  // namespace

DirichletValue dirichlet_measure(const ComplexPoly& f, const AtomicMeasure& mu, int m) {
    return measure_impl(f, mu, m);
}

DirichletValue dirichlet_measure(const RationalFn& f, const AtomicMeasure& mu, int m) {
    return measure_impl(f, mu, m);
}

double dnorm_sq(const ComplexPoly& f, const Weight& w, const DiskRule& rule) {
    return h2_norm_sq(f) + dirichlet_area(f, w, rule).value;
}

double dnorm_sq(const RationalFn& f, const Weight& w, const DiskRule& rule) {
    return h2_norm_sq(f) + dirichlet_area(f, w, rule).value;
}

double h2_norm_sq(const RationalFn& f, int m) {
    const Complex v = integrate_circle([&](Complex lam) { return Complex(std::norm(f(lam))); }, m);
    return std::real(v);
}

namespace {

constexpr double kMaxDilation = 1.0 - 1e-6;

void check_r(double r) {
    if (!(r >= 0.0 && r <= kMaxDilation))
        throw std::invalid_argument("dilation_ratio: r must lie in [0, 1 - 1e-6]");
}

double ratio_of(double num, double den) {
    if (!(den > 0.0))
        throw std::domain_error("dilation_ratio: D(f) = 0, ratio undefined");
    return num / den;
}

}  // namespace

double dilation_ratio(const ComplexPoly& f, const AtomicMeasure& mu, double r, int m) {
    check_r(r);
    return ratio_of(dirichlet_measure(f.dilated(r), mu, m).value,
                    dirichlet_measure(f, mu, m).value);
}

double dilation_ratio(const RationalFn& f, const AtomicMeasure& mu, double r, int m) {
    check_r(r);
    return ratio_of(dirichlet_measure(f.dilated(r), mu, m).value,
                    dirichlet_measure(f, mu, m).value);
}

double dilation_ratio(const ComplexPoly& f, const Weight& w, double r, const DiskRule& rule) {
    check_r(r);
    return ratio_of(dirichlet_area(f.dilated(r), w, rule).value,
                    dirichlet_area(f, w, rule).value);
}

}  // namespace dhb
