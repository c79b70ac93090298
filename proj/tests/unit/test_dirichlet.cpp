#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dhb/dirichlet.hpp"
#include "dhb/verify.hpp"

using namespace dhb;

namespace {

Weight unit_atom(Complex zeta) { return Weight::superharmonic(AtomicMeasure::dirac(zeta)); }

RationalFn cauchy_rational(Complex w) {
    return RationalFn(ComplexPoly::constant(1.0), ComplexPoly({Complex(1.0), -std::conj(w)}));
}

double closed_local(Complex zeta, Complex w) {
    return std::norm(w) / (std::norm(1.0 - std::conj(w) * zeta) * (1.0 - std::norm(w)));
}

}  // namespace

TEST_CASE("dirichlet_area closed forms") {
    const DiskRule rule(400, 2048);
    CHECK(dirichlet_area(ComplexPoly::constant(5.0), unit_atom(Complex(0.5)), rule).value ==
          doctest::Approx(0.0));
    // f = z against the log weight: D = 1
    CHECK(std::abs(dirichlet_area(ComplexPoly::monomial(1), unit_atom(Complex(0.0)), rule).value -
                   1.0) < 1e-4);
    // f = z^2 against (1-|z|^2): 4 (1/2 - 1/3) = 2/3
    CHECK(std::abs(dirichlet_area(ComplexPoly::monomial(2), Weight::power(1.0), rule).value -
                   2.0 / 3.0) < 1e-6);
    CHECK(dirichlet_area(ComplexPoly::monomial(1), unit_atom(Complex(0.0)), rule).method ==
          DirichletMethod::area_quadrature);
}

TEST_CASE("dirichlet_area with a sampled weight drops bad nodes") {
    const DiskRule rule(50, 16);
    const Weight spiky = Weight::sampled([](Complex z) {
        return std::real(z) > 0.999 ? HUGE_VAL : 1.0;  // never hit by nodes here
    });
    const auto v = dirichlet_area(ComplexPoly::monomial(1), spiky, rule);
    CHECK(v.skipped_nodes == 0);
    CHECK(v.value == doctest::Approx(1.0));

    const Weight bad = Weight::sampled(
        [](Complex z) { return std::abs(z) < 0.1 ? HUGE_VAL : 1.0; });
    const auto w = dirichlet_area(ComplexPoly::monomial(1), bad, rule);
    CHECK(w.skipped_nodes > 0);
}

TEST_CASE("local_dirichlet basics") {
    // f = z: integrand is identically 1 for every zeta
    for (const Complex zeta : {Complex(0.0), Complex(0.5), Complex(1.0), Complex(0.6, -0.8)})
        CHECK(local_dirichlet(ComplexPoly::monomial(1), zeta, 256).value == doctest::Approx(1.0));

    // kernels: D_zeta(k_w) = |w|^2 / (|1 - conj(w) zeta|^2 (1 - |w|^2))
    CHECK(std::abs(local_dirichlet(cauchy_rational(Complex(0.5)), Complex(0.0), 2048).value -
                   1.0 / 3.0) < 1e-12);
    for (const Complex zeta : {Complex(0.0), Complex(0.5), Complex(1.0), Complex(0.0, 0.8),
                               std::polar(1.0, std::numbers::pi / 3.0)})
        for (const Complex w : {Complex(0.7), Complex(0.1, -0.6), Complex(-0.35, 0.35)})
            CHECK(std::abs(local_dirichlet(cauchy_rational(w), zeta, 2048).value -
                           closed_local(zeta, w)) < 1e-8);

    // the truncated-polynomial carrier agrees with the rational one
    const ComplexPoly kp = cauchy_kernel(Complex(0.5), 128);
    CHECK(std::abs(local_dirichlet(kp, Complex(1.0), 2048).value -
                   closed_local(Complex(1.0), Complex(0.5))) < 1e-9);

    CHECK_THROWS_AS(local_dirichlet(ComplexPoly::monomial(1), Complex(1.5), 64),
                    std::invalid_argument);
}

TEST_CASE("dirichlet_measure averages local integrals") {
    const ComplexPoly f({Complex(1.0), Complex(0.5, 0.5), Complex(0.0), Complex(-0.25)});
    const AtomicMeasure single({Atom{Complex(0.4, 0.1), 1.0}});
    CHECK(dirichlet_measure(f, single, 512).value ==
          doctest::Approx(local_dirichlet(f, Complex(0.4, 0.1), 512).value));

    // doubling every mass doubles the value
    const AtomicMeasure mu({Atom{Complex(0.0), 0.5}, Atom{Complex(1.0), 0.25}});
    const AtomicMeasure mu2({Atom{Complex(0.0), 1.0}, Atom{Complex(1.0), 0.5}});
    CHECK(dirichlet_measure(f, mu2, 512).value ==
          doctest::Approx(2.0 * dirichlet_measure(f, mu, 512).value));

    // mu = (1/2) d_0 + (1/2) d_{1/2} on k_{1/3}: closed form per atom
    const RationalFn k = cauchy_rational(Complex(1.0 / 3.0));
    const AtomicMeasure half({Atom{Complex(0.0), 0.5}, Atom{Complex(0.5), 0.5}});
    const double expect =
        0.5 * closed_local(Complex(0.0), Complex(1.0 / 3.0)) +
        0.5 * closed_local(Complex(0.5), Complex(1.0 / 3.0));
    CHECK(expect == doctest::Approx(0.5 * 0.125 + 0.5 * 0.18));  // 0.1525
    CHECK(std::abs(dirichlet_measure(k, half, 2048).value - expect) < 1e-12);
}

TEST_CASE("dnorm_sq") {
    const DiskRule rule(400, 2048);
    CHECK(dnorm_sq(ComplexPoly::constant(1.0), unit_atom(Complex(0.7)), rule) ==
          doctest::Approx(1.0));
    CHECK(std::abs(dnorm_sq(ComplexPoly::monomial(1), unit_atom(Complex(0.0)), rule) - 2.0) <
          1e-4);
    // k_{1/2} with the log weight: 4/3 + 1/3 = 5/3
    CHECK(std::abs(dnorm_sq(cauchy_rational(Complex(0.5)), unit_atom(Complex(0.0)), rule) -
                   5.0 / 3.0) < 1e-4);
}

TEST_CASE("douglas formula ties area to boundary for interior atoms") {
    const DiskRule rule(400, 2048);
    const auto fam = random_poly_family(8, 8, 2024);
    for (const auto& f : fam) {
        for (const Complex zeta : {Complex(0.0), Complex(0.5), Complex(0.0, 0.3)}) {
            const double boundary = local_dirichlet(f, zeta, 2048).value;
            const double area = dirichlet_area(f, unit_atom(zeta), rule).value;
            CHECK(std::abs(area - boundary) <= 1e-4 * (1.0 + boundary));
        }
    }
}

TEST_CASE("local dirichlet of kernels matches the closed form on a |w| <= 0.7 grid") {
    for (const Complex zeta : {Complex(0.0), Complex(0.5), Complex(0.3, 0.4), Complex(1.0)}) {
        for (int i = 1; i <= 7; ++i) {
            for (int j = 0; j < 4; ++j) {
                const Complex w =
                    std::polar(0.1 * double(i), 2.0 * std::numbers::pi * double(j) / 4.0);
                CHECK(std::abs(local_dirichlet(cauchy_rational(w), zeta, 2048).value -
                               closed_local(zeta, w)) <= 1e-8 * (1.0 + closed_local(zeta, w)));
            }
        }
    }
}

TEST_CASE("dilation ratio") {
    const AtomicMeasure mu({Atom{Complex(0.5), 1.0}});
    // f = z: the ratio is exactly r^2 for any measure
    for (const double r : {0.1, 0.5, 0.9})
        CHECK(dilation_ratio(ComplexPoly::monomial(1), mu, r, 512) == doctest::Approx(r * r));

    // bound 2r/(1+r), and the squared single-atom bound
    const auto fam = random_poly_family(10, 10, 99);
    for (const auto& f : fam) {
        for (const double r : {0.2, 0.6, 0.85}) {
            const double ratio = dilation_ratio(f, mu, r, 1024);
            CHECK(ratio <= 2.0 * r / (1.0 + r) + 1e-10);
            const double b = r * 1.5 / (1.0 + 0.5 * r);
            CHECK(ratio <= b * b + 1e-10);
        }
    }

    // monotone in r
    for (const auto& f : {fam[0], fam[1]}) {
        double prev = -1.0;
        for (int k = 0; k <= 9; ++k) {
            const double v = dirichlet_measure(dilate(f, 0.1 * double(k)), mu, 512).value;
            CHECK(v >= prev - 1e-12);
            prev = v;
        }
    }

    CHECK_THROWS_AS(dilation_ratio(ComplexPoly::monomial(1), mu, 1.0, 64),
                    std::invalid_argument);
    CHECK_THROWS_AS(dilation_ratio(ComplexPoly::monomial(1), mu, -0.1, 64),
                    std::invalid_argument);
    CHECK_THROWS_AS(dilation_ratio(ComplexPoly::constant(3.0), mu, 0.5, 64), std::domain_error);

    // weight-target overload, same method both sides
    const DiskRule rule(200, 256);
    CHECK(std::abs(dilation_ratio(ComplexPoly::monomial(1), unit_atom(Complex(0.0)), 0.5, rule) -
                   0.25) < 1e-10);
}
