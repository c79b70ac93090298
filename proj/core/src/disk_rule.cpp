#include "dhb/disk_rule.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dhb/summation.hpp"

namespace dhb {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    nodes.assign(std::size_t(n), 0.0);
    weights.assign(std::size_t(n), 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev-like initial guess
        double z = std::cos(std::numbers::pi * (double(i) + 0.75) / (double(n) + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - double(j) * p3) / double(j + 1);
            }
            pp = double(n) * (z * p1 - p2) / (z * z - 1.0);
            const double dz = -p1 / pp;
            z += dz;
            if (std::abs(dz) < 1e-15) break;
        }
        nodes[std::size_t(i)] = -z;
        nodes[std::size_t(n - 1 - i)] = z;
        weights[std::size_t(i)] = weights[std::size_t(n - 1 - i)] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

namespace {

// Append a Gauss-Legendre rule for int_lo^hi h(r) 2r dr.
void append_segment(double lo, double hi, int n, std::vector<double>& r, std::vector<double>& w) {
    std::vector<double> x, gw;
    gauss_legendre(n, x, gw);
    const double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
    for (int i = 0; i < n; ++i) {
        const double ri = mid + half * x[std::size_t(i)];
        r.push_back(ri);
        w.push_back(gw[std::size_t(i)] * half * 2.0 * ri);
    }
}

}  // namespace

DiskRule::DiskRule(int n_r, int n_theta) : n_theta_(n_theta) {
    if (n_r < 2) throw std::invalid_argument("DiskRule: n_r must be >= 2");
    if (n_theta < 4) throw std::invalid_argument("DiskRule: n_theta must be >= 4");
    append_segment(0.0, 1.0, n_r, radial_nodes_, radial_weights_);
}

double DiskRule::theta(int j) const {
    return theta_offset_ + 2.0 * std::numbers::pi * (double(j) + 0.5) / double(n_theta_);
}

double DiskRule::total_mass() const { return pairwise_sum(radial_weights_); }

DiskRule DiskRule::rotated(double phi) const {
    DiskRule r(*this);
    r.theta_offset_ += phi;
    return r;
}

DiskRule DiskRule::with_radial_split(double s) const {
    if (!(s > 1e-12 && s < 1.0 - 1e-12)) return *this;
    DiskRule r;
    r.n_theta_ = n_theta_;
    r.theta_offset_ = theta_offset_;
    const int n = n_radial();
    append_segment(0.0, s, n, r.radial_nodes_, r.radial_weights_);
    append_segment(s, 1.0, n, r.radial_nodes_, r.radial_weights_);
    return r;
}

namespace {

template <typename T, typename F>
T integrate_impl(F&& g, const DiskRule& rule, bool skip_nonfinite, int* skipped) {
    const int nt = rule.n_theta();
    std::vector<Complex> dirs(static_cast<std::size_t>(nt));
    for (int j = 0; j < nt; ++j) dirs[std::size_t(j)] = std::polar(1.0, rule.theta(j));
    const auto r = rule.radial_nodes();
    const auto w = rule.radial_weights();
    std::vector<T> ring(static_cast<std::size_t>(nt));
    std::vector<T> radial(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (int j = 0; j < nt; ++j) {
            T v = g(r[i] * dirs[std::size_t(j)]);
            if (!std::isfinite(std::abs(v))) {
                if (skip_nonfinite) {
                    v = T{};
                    ++*skipped;
                } else {
                    throw std::domain_error("integrate_disk: non-finite integrand at r=" +
                                            std::to_string(r[i]) +
                                            ", theta=" + std::to_string(rule.theta(j)));
                }
            }
            ring[std::size_t(j)] = v;
        }
        radial[i] = pairwise_sum(std::span<const T>(ring)) * (w[i] / double(nt));
    }
    return pairwise_sum(std::span<const T>(radial));
}

}  // namespace

Complex integrate_disk(const std::function<Complex(Complex)>& g, const DiskRule& rule) {
    return integrate_impl<Complex>(g, rule, false, nullptr);
}

double integrate_disk_real(const std::function<double(Complex)>& g, const DiskRule& rule) {
    return integrate_impl<double>(g, rule, false, nullptr);
}

double integrate_disk_skip_nonfinite(const std::function<double(Complex)>& g,
                                     const DiskRule& rule, int& skipped) {
    skipped = 0;
    return integrate_impl<double>(g, rule, true, &skipped);
}

Complex integrate_circle(const std::function<Complex(Complex)>& g, int m) {
    if (m < 1) throw std::invalid_argument("integrate_circle: m must be >= 1");
    std::vector<Complex> v(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Complex lam = std::polar(1.0, 2.0 * std::numbers::pi * double(j) / double(m));
        v[std::size_t(j)] = g(lam);
        if (!std::isfinite(std::abs(v[std::size_t(j)])))
            throw std::domain_error("integrate_circle: non-finite sample at node j=" +
                                    std::to_string(j));
    }
    return pairwise_sum(std::span<const Complex>(v)) / double(m);
}

}  // namespace dhb
