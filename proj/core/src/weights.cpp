#include "dhb/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "dhb/summation.hpp"

namespace dhb {

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    for (const auto& a : atoms_) {
        if (!(a.mass > 0.0) || !std::isfinite(a.mass))
            throw std::invalid_argument("AtomicMeasure: masses must be strictly positive");
        if (std::abs(a.zeta) > 1.0 + kBoundaryAtomTol)
            throw std::invalid_argument("AtomicMeasure: atoms must lie in the closed disk");
    }
}

AtomicMeasure AtomicMeasure::dirac(Complex zeta, double mass) {
    return AtomicMeasure({Atom{zeta, mass}});
}

double AtomicMeasure::total_mass() const {
    double s = 0.0;
    for (const auto& a : atoms_) s += a.mass;
    return s;
}

SignedAtomicMeasure::SignedAtomicMeasure(std::vector<SignedAtom> atoms)
    : atoms_(std::move(atoms)) {
    for (const auto& a : atoms_) {
        if (a.mass == 0.0 || !std::isfinite(a.mass))
            throw std::invalid_argument("SignedAtomicMeasure: masses must be nonzero");
        if (std::abs(a.zeta) > 1.0 + kBoundaryAtomTol)
            throw std::invalid_argument("SignedAtomicMeasure: atoms must lie in the closed disk");
    }
}

double SignedAtomicMeasure::total_mass() const {
    double s = 0.0;
    for (const auto& a : atoms_) s += a.mass;
    return s;
}

Weight Weight::superharmonic(AtomicMeasure mu) {
    Weight w(Kind::atomic);
    w.mu_ = std::make_shared<const AtomicMeasure>(std::move(mu));
    return w;
}

Weight Weight::power(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("Weight::power: alpha must lie in [0,1]");
    Weight w(Kind::power);
    w.alpha_ = alpha;
    return w;
}

Weight Weight::sampled(std::function<double(Complex)> eval) {
    Weight w(Kind::sampled);
    w.eval_ = std::move(eval);
    return w;
}

const AtomicMeasure& Weight::measure() const {
    if (kind_ != Kind::atomic) throw std::logic_error("Weight::measure: not an atomic weight");
    return *mu_;
}

double Weight::alpha() const {
    if (kind_ != Kind::power) throw std::logic_error("Weight::alpha: not a power weight");
    return alpha_;
}

namespace {

bool is_boundary_atom(Complex zeta) { return std::abs(zeta) > 1.0 - kBoundaryAtomTol; }

// Unit-mass atom weight at zeta evaluated at z in the open disk.
double atom_value(Complex zeta, Complex z) {
    if (is_boundary_atom(zeta)) {
        const double d2 = std::norm(zeta - z);
        return (1.0 - std::norm(z)) / d2;
    }
    const double s2 = std::norm(zeta);
    if (std::abs(zeta - z) == 0.0) return HUGE_VAL;  // integrable singularity, not an error
    return 2.0 / (1.0 - s2) * std::log(std::abs((1.0 - std::conj(zeta) * z) / (zeta - z)));
}

}  // namespace

double Weight::operator()(Complex z) const {
    if (!(std::abs(z) < 1.0)) throw std::invalid_argument("eval_weight: |z| must be < 1");
    switch (kind_) {
        case Kind::atomic: {
            double s = 0.0;
            for (const auto& a : mu_->atoms()) s += a.mass * atom_value(a.zeta, z);
            return s;
        }
        case Kind::power:
            return std::pow(1.0 - std::norm(z), alpha_);
        case Kind::sampled:
            return eval_(z);
    }
    return 0.0;
}

double eval_weight(const Weight& w, Complex z) { return w(z); }

Complex atom_angular_coefficient(Complex zeta, int k, double r) {
    if (k < 0) return std::conj(atom_angular_coefficient(zeta, -k, r));
    const double s = std::abs(zeta);
    if (is_boundary_atom(zeta)) return std::pow(r, k) * complex_ipow(std::conj(zeta) / s, k);
    const double c = 2.0 / (1.0 - s * s);
    if (k == 0) return c * std::log(1.0 / std::max(r, s));
    if (s <= kBoundaryAtomTol) return Complex(0.0);  // radially symmetric
    // powers of the ratio min/max stay in (0,1]; the factored form would overflow
    const Complex phase = complex_ipow(std::conj(zeta) / s, k);
    if (r <= s)
        return c * phase * std::pow(r / s, k) * (1.0 - std::pow(s, 2 * k)) / double(2 * k);
    return c * phase * std::pow(s / r, k) * (1.0 - std::pow(r, 2 * k)) / double(2 * k);
}

namespace {

// int_0^1 h(r) 2r dr by Gauss-Legendre on the given segments.
double radial_integral(const std::function<double(double)>& h, std::span<const double> breaks,
                       int n) {
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    std::vector<double> terms;
    terms.reserve(breaks.size() * std::size_t(n));
    for (std::size_t seg = 0; seg + 1 < breaks.size(); ++seg) {
        const double lo = breaks[seg], hi = breaks[seg + 1];
        const double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
        for (int i = 0; i < n; ++i) {
            const double r = mid + half * x[std::size_t(i)];
            terms.push_back(w[std::size_t(i)] * half * 2.0 * r * h(r));
        }
    }
    return pairwise_sum(std::span<const double>(terms));
}

}  // namespace

double l1_norm(const Weight& w, const DiskRule& rule) {
    const int n = std::max(rule.n_radial(), 64);
    switch (w.kind()) {
        case Weight::Kind::atomic: {
            std::vector<double> per_atom;
            for (const auto& a : w.measure().atoms()) {
                const double s = std::abs(a.zeta);
                std::vector<double> breaks;
                if (!is_boundary_atom(a.zeta) && s > 1e-12)
                    breaks = {0.0, s, 1.0};
                else
                    breaks = {0.0, 1.0};
                const double v = radial_integral(
                    [&](double r) { return std::real(atom_angular_coefficient(a.zeta, 0, r)); },
                    breaks, n);
                per_atom.push_back(a.mass * v);
            }
            return pairwise_sum(std::span<const double>(per_atom));
        }
        case Weight::Kind::power: {
            // u = 1-r^2, u = v^4 turns int (1-r^2)^a 2r dr into 4 int v^{4a+3} dv,
            // removing the endpoint singularity for fractional alpha.
            const double alpha = w.alpha();
            std::vector<double> x, gw;
            gauss_legendre(n, x, gw);
            std::vector<double> terms(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const double v = 0.5 * (x[std::size_t(i)] + 1.0);
                terms[std::size_t(i)] =
                    0.5 * gw[std::size_t(i)] * 4.0 * std::pow(v, 4.0 * alpha + 3.0);
            }
            return pairwise_sum(std::span<const double>(terms));
        }
        case Weight::Kind::sampled:
            return integrate_disk_real([&](Complex z) { return w(z); }, rule);
    }
    return 0.0;
}

double moment_residual(const SignedAtomicMeasure& mu, int m_max, int n_max) {
    if (m_max < 0 || n_max < 0)
        throw std::invalid_argument("moment_residual: orders must be >= 0");
    const auto atoms = mu.atoms();
    const double total = mu.total_mass();
    std::vector<std::vector<Complex>> zpow(atoms.size());
    const int kmax = std::max(n_max, m_max);
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        zpow[a].resize(std::size_t(kmax) + 1);
        zpow[a][0] = Complex(1.0);
        for (int k = 1; k <= kmax; ++k) zpow[a][std::size_t(k)] = zpow[a][std::size_t(k - 1)] * atoms[a].zeta;
    }
    auto S = [&](int nn) {
        Complex s(0.0);
        for (std::size_t a = 0; a < atoms.size(); ++a) s += atoms[a].mass * zpow[a][std::size_t(nn)];
        return s;
    };
    double worst = 0.0;
    for (int nn = 0; nn <= n_max; ++nn) {
        for (int mm = 0; mm <= m_max; ++mm) {
            Complex joint(0.0);
            for (std::size_t a = 0; a < atoms.size(); ++a)
                joint += atoms[a].mass * zpow[a][std::size_t(nn)] * std::conj(zpow[a][std::size_t(mm)]);
            const double res = std::abs(total * joint - S(nn) * std::conj(S(mm)));
            worst = std::max(worst, res);
        }
    }
    return worst;
}

double moment_residual_at(const SignedAtomicMeasure& mu, int n, int m) {
    const auto atoms = mu.atoms();
    Complex joint(0.0), sn(0.0), sm(0.0);
    for (const auto& a : atoms) {
        const Complex zn = complex_ipow(a.zeta, n);
        const Complex zm = complex_ipow(a.zeta, m);
        joint += a.mass * zn * std::conj(zm);
        sn += a.mass * zn;
        sm += a.mass * zm;
    }
    return std::abs(mu.total_mass() * joint - sn * std::conj(sm));
}

}  // namespace dhb
