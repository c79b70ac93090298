#include "dhb/bergman.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dhb/summation.hpp"

namespace dhb {

namespace {

struct RadialGrid {
    std::vector<double> r, w;  // weights include segment scaling, not the 2r density
};

RadialGrid radial_grid(std::span<const double> breaks, int n) {
    std::vector<double> x, gw;
    gauss_legendre(n, x, gw);
    RadialGrid g;
    for (std::size_t seg = 0; seg + 1 < breaks.size(); ++seg) {
        const double lo = breaks[seg], hi = breaks[seg + 1];
        const double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
        for (int i = 0; i < n; ++i) {
            g.r.push_back(mid + half * x[std::size_t(i)]);
            g.w.push_back(gw[std::size_t(i)] * half);
        }
    }
    return g;
}

}  // namespace

WeightMoments::WeightMoments(const Weight& w, const DiskRule& rule, int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("WeightMoments: order must be >= 0");
    if (w.kind() == Weight::Kind::sampled)
        throw std::logic_error("WeightMoments: sampled weights have no moment table");
    const std::size_t dim = std::size_t(order) + 1;
    w_.assign(dim * dim, Complex(0.0));

    if (w.kind() == Weight::Kind::power) {
        // radially symmetric: W[n][n] = int (1-r^2)^alpha r^{2n} 2r dr, u = 1-r^2 = v^4
        const double alpha = w.alpha();
        const int n_gl = std::max(rule.n_radial(), 2 * order + 8);
        std::vector<double> x, gw;
        gauss_legendre(n_gl, x, gw);
        for (int n = 0; n <= order; ++n) {
            std::vector<double> terms(static_cast<std::size_t>(n_gl));
            for (int i = 0; i < n_gl; ++i) {
                const double v = 0.5 * (x[std::size_t(i)] + 1.0);
                const double u = std::pow(v, 4.0);
                terms[std::size_t(i)] = 0.5 * gw[std::size_t(i)] * 4.0 * std::pow(v, 3.0) *
                                        std::pow(u, alpha) * std::pow(1.0 - u, double(n));
            }
            w_[std::size_t(n) * dim + std::size_t(n)] = pairwise_sum(std::span<const double>(terms));
        }
        return;
    }

    // Atomic: radial integrands r^{n+m+1} a_{n-m}(r) are piecewise polynomial,
    // so order+2 Gauss points per piece integrate them exactly.
    const int n_gl = std::max(rule.n_radial(), order + 4);
    for (const auto& atom : w.measure().atoms()) {
        const double s = std::abs(atom.zeta);
        std::vector<double> breaks;
        if (s > kBoundaryAtomTol && s < 1.0 - kBoundaryAtomTol)
            breaks = {0.0, s, 1.0};
        else
            breaks = {0.0, 1.0};
        const RadialGrid g = radial_grid(breaks, n_gl);
        const std::size_t nn = g.r.size();

        // angular coefficients a_k(r_i) for k = 0..order
        std::vector<Complex> ak(std::size_t(order + 1) * nn);
        for (int k = 0; k <= order; ++k)
            for (std::size_t i = 0; i < nn; ++i)
                ak[std::size_t(k) * nn + i] = atom_angular_coefficient(atom.zeta, k, g.r[i]);

        // rp[j][i] = w_i * 2 * r_i^{j+1}, so row n+m carries the factor 2 r^{n+m+1}
        std::vector<double> rp(std::size_t(2 * order + 1) * nn);
        for (std::size_t i = 0; i < nn; ++i) rp[i] = g.w[i] * 2.0 * g.r[i];
        for (int j = 1; j <= 2 * order; ++j)
            for (std::size_t i = 0; i < nn; ++i)
                rp[std::size_t(j) * nn + i] = rp[std::size_t(j - 1) * nn + i] * g.r[i];

        for (int n = 0; n <= order; ++n) {
            for (int m = 0; m <= n; ++m) {
                const int k = n - m;
                const double* pw = &rp[std::size_t(n + m) * nn];
                const Complex* fk = &ak[std::size_t(k) * nn];
                Complex acc(0.0);
                for (std::size_t i = 0; i < nn; ++i) acc += pw[i] * fk[i];
                w_[std::size_t(n) * dim + std::size_t(m)] += atom.mass * acc;
            }
        }
    }
    // Hermitian fill: W[m][n] = conj(W[n][m])
    for (int n = 0; n <= order; ++n)
        for (int m = n + 1; m <= order; ++m)
            w_[std::size_t(n) * dim + std::size_t(m)] =
                std::conj(w_[std::size_t(m) * dim + std::size_t(n)]);
}

Complex WeightMoments::moment(int n, int m) const {
    if (n < 0 || m < 0 || n > order_ || m > order_)
        throw std::out_of_range("WeightMoments::moment");
    return w_[std::size_t(n) * std::size_t(order_ + 1) + std::size_t(m)];
}

ComplexPoly WeightMoments::bergman_taylor() const {
    std::vector<Complex> c(std::size_t(order_) + 1);
    for (int m = 0; m <= order_; ++m) c[std::size_t(m)] = double(m + 1) * moment(m, 0);
    return ComplexPoly(std::move(c));
}

Complex WeightMoments::bergman_at(Complex z) const { return bergman_taylor()(z); }

double WeightMoments::berezin_at(Complex z) const {
    const std::size_t dim = std::size_t(order_) + 1;
    std::vector<Complex> zn(dim), zm(dim);
    zn[0] = zm[0] = Complex(1.0);
    for (std::size_t k = 1; k < dim; ++k) {
        zn[k] = zn[k - 1] * z;
        zm[k] = zm[k - 1] * std::conj(z);
    }
    Complex acc(0.0);
    for (std::size_t n = 0; n < dim; ++n) {
        Complex row(0.0);
        for (std::size_t m = 0; m < dim; ++m)
            row += double(m + 1) * zm[m] * w_[n * dim + m];
        acc += double(n + 1) * zn[n] * row;
    }
    const double f = 1.0 - std::norm(z);
    return f * f * std::real(acc);
}

Complex bergman_projection(const Weight& w, Complex z, const DiskRule& rule, int order) {
    if (!(std::abs(z) < 1.0)) throw std::invalid_argument("bergman_projection: |z| must be < 1");
    if (w.kind() == Weight::Kind::sampled) {
        return integrate_disk(
            [&](Complex v) {
                const Complex d = 1.0 - std::conj(v) * z;
                return w(v) / (d * d);
            },
            rule);
    }
    return WeightMoments(w, rule, order).bergman_at(z);
}

double berezin(const Weight& w, Complex z, const DiskRule& rule, int order) {
    if (!(std::abs(z) < 1.0)) throw std::invalid_argument("berezin: |z| must be < 1");
    if (w.kind() == Weight::Kind::sampled) {
        const double f = 1.0 - std::norm(z);
        return f * f *
               integrate_disk_real(
                   [&](Complex v) {
                       const double d = std::norm(1.0 - std::conj(v) * z);
                       return w(v) / (d * d);
                   },
                   rule);
    }
    return WeightMoments(w, rule, order).berezin_at(z);
}

double qb_residual(const Weight& w, std::span<const Complex> grid, const DiskRule& rule,
                   int order) {
    double worst = 0.0;
    if (w.kind() == Weight::Kind::sampled) {
        for (const Complex& z : grid) {
            const Complex q = bergman_projection(w, z, rule, order);
            const double b = berezin(w, z, rule, order);
            worst = std::max(worst, std::abs((1.0 - std::norm(z)) * std::norm(q) - b));
        }
        return worst;
    }
    const WeightMoments mom(w, rule, order);
    const ComplexPoly q = mom.bergman_taylor();
    for (const Complex& z : grid) {
        const double lhs = (1.0 - std::norm(z)) * std::norm(q(z));
        worst = std::max(worst, std::abs(lhs - mom.berezin_at(z)));
    }
    return worst;
}

std::vector<Complex> default_qb_grid() {
    std::vector<Complex> g;
    for (int i = 1; i <= 15; ++i) {
        const double r = 0.9 * double(i) / 15.0;
        for (int j = 0; j < 16; ++j)
            g.push_back(std::polar(r, 2.0 * std::numbers::pi * (double(j) + 0.5) / 16.0));
    }
    return g;
}

}  // namespace dhb
