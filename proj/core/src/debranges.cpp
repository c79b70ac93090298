#include "dhb/debranges.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dhb/fft.hpp"

namespace dhb {

PairBA::PairBA(ComplexPoly a, ComplexPoly b, BoundarySamples as, BoundarySamples bs,
               RationalFn phi)
    : a_(std::move(a)),
      b_(std::move(b)),
      a_samples_(std::move(as)),
      b_samples_(std::move(bs)),
      phi_(std::move(phi)) {
    validate();
}

void PairBA::validate() const {
    if (!(a0() > 1e-12) || std::abs(std::imag(a_.coeff(0))) > 1e-9)
        throw std::domain_error("PairBA: a(0) must be real and positive");
    if (pair_identity_residual() > 1e-8)
        throw std::domain_error("PairBA: |a|^2 + |b|^2 = 1 violated on the boundary grid");
    if (sup_b() > 1.0 + 1e-10)
        throw std::domain_error("PairBA: |b| exceeds 1 on the boundary grid");
    if (symbol_residual() > 1e-8)
        throw std::domain_error("PairBA: b/a does not match phi on the boundary grid");
}

double PairBA::pair_identity_residual() const {
    double worst = 0.0;
    for (int j = 0; j < grid_size(); ++j)
        worst = std::max(worst,
                         std::abs(std::norm(a_samples_[j]) + std::norm(b_samples_[j]) - 1.0));
    return worst;
}

double PairBA::symbol_residual() const {
    const int m = grid_size();
    double worst = 0.0;
    for (int j = 0; j < m; ++j) {
        const Complex lam = BoundarySamples::node(j, m);
        const Complex nv = phi_.num()(lam), dv = phi_.den()(lam);
        const double res = std::abs(b_samples_[j] * dv - a_samples_[j] * nv) /
                           (1.0 + std::abs(nv) + std::abs(dv));
        worst = std::max(worst, res);
    }
    return worst;
}

double PairBA::sup_b() const {
    double worst = 0.0;
    for (int j = 0; j < grid_size(); ++j) worst = std::max(worst, std::abs(b_samples_[j]));
    return worst;
}

PairBA PairBA::from_phi(const RationalFn& phi, int m, int n) {
    if (m < 8 || !is_power_of_two(std::size_t(m)))
        throw std::invalid_argument("PairBA::from_phi: M must be a power of two (>= 8)");
    if (n < 1 || n >= m / 2) throw std::invalid_argument("PairBA::from_phi: need 1 <= N < M/2");
    if (!phi.pole_free_in_open_disk())
        throw std::domain_error("PairBA::from_phi: phi has a pole inside the unit disk");

    std::vector<Complex> nv(static_cast<std::size_t>(m)), dv(static_cast<std::size_t>(m));
    std::vector<Complex> u(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Complex lam = BoundarySamples::node(j, m);
        nv[std::size_t(j)] = phi.num()(lam);
        dv[std::size_t(j)] = phi.den()(lam);
        u[std::size_t(j)] =
            -0.5 * std::log(std::norm(nv[std::size_t(j)]) + std::norm(dv[std::size_t(j)]));
    }

    // analytic completion of the real log-modulus: keep the zero mode once,
    // double positive frequencies, drop negative ones
    fft_inplace(u);
    std::vector<Complex> oneside(std::size_t(m), Complex(0.0));
    const double inv = 1.0 / double(m);
    oneside[0] = u[0] * inv;
    for (int k = 1; k < m / 2; ++k) oneside[std::size_t(k)] = 2.0 * u[std::size_t(k)] * inv;
    oneside[std::size_t(m / 2)] = u[std::size_t(m / 2)] * inv;
    ifft_inplace(oneside);

    std::vector<Complex> as(static_cast<std::size_t>(m)), bs(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Complex g = std::exp(oneside[std::size_t(j)] * double(m));
        as[std::size_t(j)] = dv[std::size_t(j)] * g;
        bs[std::size_t(j)] = nv[std::size_t(j)] * g;
    }
    const Complex d0 = phi.den()(Complex(0.0));
    const Complex phase = std::conj(d0) / std::abs(d0);
    for (int j = 0; j < m; ++j) {
        as[std::size_t(j)] *= phase;
        bs[std::size_t(j)] *= phase;
    }

    BoundarySamples asamp(std::move(as)), bsamp(std::move(bs));
    ComplexPoly a_coeffs = samples_to_coeffs(asamp, n);
    ComplexPoly b_coeffs = samples_to_coeffs(bsamp, n);
    return PairBA(std::move(a_coeffs), std::move(b_coeffs), std::move(asamp), std::move(bsamp),
                  phi);
}

PairConstants pair_constants(Complex zeta) {
    const double s2 = std::norm(zeta);
    const double a = std::sqrt((2.0 + s2 + std::sqrt(4.0 + s2 * s2)) / 2.0);
    return {a, std::conj(zeta) / a};
}

PairBA PairBA::closed_form(Complex zeta, int m, int n) {
    if (std::abs(zeta) > 1.0 + 1e-12)
        throw std::invalid_argument("PairBA::closed_form: zeta must lie in the closed disk");
    const auto [A, B] = pair_constants(zeta);
    const ComplexPoly den({Complex(A), -B});
    // pole of b and a at A/B, |A/B| = A^2/|zeta| > 1
    const RationalFn b_rat(ComplexPoly::monomial(1), den, PoleCheck::none);
    const RationalFn a_rat(ComplexPoly({Complex(1.0), -std::conj(zeta)}), den, PoleCheck::none);
    const RationalFn phi(ComplexPoly::monomial(1), ComplexPoly({Complex(1.0), -std::conj(zeta)}),
                         PoleCheck::open_disk);
    return PairBA(rational_to_poly(a_rat, n), rational_to_poly(b_rat, n),
                  boundary_samples(a_rat, m), boundary_samples(b_rat, m), phi);
}

ComplexPoly toeplitz_conj_apply(const ComplexPoly& h, const ComplexPoly& f, int n) {
    if (n < 0) throw std::invalid_argument("toeplitz_conj_apply: negative truncation");
    std::vector<Complex> out(std::size_t(n) + 1, Complex(0.0));
    for (int k = 0; k <= n; ++k) {
        Complex s(0.0);
        const int jmax = f.degree() - k;
        for (int j = 0; j <= std::min(jmax, h.degree()); ++j)
            s += std::conj(h.coeff(j)) * f.coeff(k + j);
        out[std::size_t(k)] = s;
    }
    return ComplexPoly(std::move(out));
}

ComplexPoly f_plus(const ComplexPoly& f, const PairBA& pair, int n) {
    if (n > pair.truncation())
        throw std::invalid_argument("f_plus: N exceeds the pair truncation");
    const double a0 = pair.a0();
    if (!(a0 > 1e-12)) throw std::domain_error("f_plus: pair rejected, a(0) ~ 0");
    // When a has a zero on the circle the downward error recursion of the back
    // substitution has a unit-modulus root, so truncation error at the top does
    // not decay. Solve with a guard band and return coefficients 0..n only.
    const int top = n + 64;
    const ComplexPoly rhs = toeplitz_conj_apply(pair.b(), f, top);
    const ComplexPoly& a = pair.a();
    std::vector<Complex> g(std::size_t(top) + 1, Complex(0.0));
    for (int k = top; k >= 0; --k) {
        Complex s = rhs.coeff(k);
        for (int j = 1; j <= std::min(a.degree(), top - k); ++j)
            s -= std::conj(a.coeff(j)) * g[std::size_t(k + j)];
        g[std::size_t(k)] = s / std::conj(a.coeff(0));
    }
    g.resize(std::size_t(n) + 1);
    return ComplexPoly(std::move(g));
}

double hb_norm_sq(const ComplexPoly& f, const PairBA& pair) {
    const ComplexPoly fp = f_plus(f, pair, pair.truncation());
    return h2_norm_sq(f) + h2_norm_sq(fp);
}

Complex hb_kernel(const PairBA& pair, Complex w, Complex z) {
    if (!(std::abs(w) < 1.0 && std::abs(z) < 1.0))
        throw std::invalid_argument("hb_kernel: w and z must lie in the open disk");
    const Complex bw = pair.b()(w), bz = pair.b()(z);
    return (1.0 - std::conj(bw) * bz) / (1.0 - std::conj(w) * z);
}

namespace {

struct TrimmedMean {
    double mean = 0.0;
    int excluded = 0;
    bool finite = false;
};

TrimmedMean trimmed_log_mean(const ComplexPoly& b, int m) {
    const BoundarySamples s = boundary_samples(b, m);
    double acc = 0.0;
    int kept = 0, excluded = 0;
    for (int j = 0; j < m; ++j) {
        const double gap = 1.0 - std::norm(s[j]);
        if (gap < 1e-14) {
            ++excluded;
            continue;
        }
        acc += std::log(gap);
        ++kept;
    }
    TrimmedMean t;
    t.excluded = excluded;
    if (kept > 0) {
        t.mean = acc / double(kept);
        t.finite = std::isfinite(t.mean);
    }
    return t;
}

}  // namespace

NonextremeResult is_nonextreme(const ComplexPoly& b, int m) {
    if (m < 8 || !is_power_of_two(std::size_t(m)))
        throw std::invalid_argument("is_nonextreme: M must be a power of two (>= 8)");
    const TrimmedMean coarse = trimmed_log_mean(b, m);
    const TrimmedMean fine = trimmed_log_mean(b, 2 * m);
    NonextremeResult r;
    r.excluded = fine.excluded;
    if (!coarse.finite || !fine.finite) {
        r.log_integral = -HUGE_VAL;
        return r;
    }
    r.log_integral = fine.mean;
    const bool few_excluded = fine.excluded <= (2 * m) / 8 && coarse.excluded <= m / 8;
    r.stable = std::abs(fine.mean - coarse.mean) <= 0.05 * (1.0 + std::abs(fine.mean));
    r.nonextreme = r.stable && few_excluded;
    return r;
}

NonextremeResult is_nonextreme(const PairBA& pair, int m) { return is_nonextreme(pair.b(), m); }

InnerFactorZ inner_factor_is_z_check(const ComplexPoly& b, std::span<const Complex> grid) {
    const double scale = b.max_abs_coeff();
    if (scale == 0.0) return InnerFactorZ::indeterminate;  // degenerate symbol
    if (std::abs(b.coeff(0)) > 1e-8 * scale) return InnerFactorZ::no;  // not divisible by z
    // q = b/z; a zero of q at 0 means the inner factor contains z^2
    const ComplexPoly q = b.difference_quotient(Complex(0.0));
    if (std::abs(q.coeff(0)) <= 1e-8 * scale) return InnerFactorZ::no;
    double lo = HUGE_VAL;
    for (const Complex& z : grid) lo = std::min(lo, std::abs(q(z)));
    return lo > 1e-8 ? InnerFactorZ::yes : InnerFactorZ::indeterminate;
}

InnerFactorZ inner_factor_is_z_check(const PairBA& pair, std::span<const Complex> grid) {
    return inner_factor_is_z_check(pair.b(), grid);
}

std::vector<Complex> default_inner_factor_grid() {
    std::vector<Complex> g;
    for (int i = 1; i <= 10; ++i) {
        const double r = 0.95 * double(i) / 10.0;
        for (int j = 0; j < 24; ++j)
            g.push_back(std::polar(r, 2.0 * std::numbers::pi * (double(j) + 0.5) / 24.0));
    }
    return g;
}

}  // namespace dhb
