#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dhb/debranges.hpp"
#include "dhb/verify.hpp"

using namespace dhb;

namespace {

RationalFn phi_for(Complex zeta) {
    return RationalFn(ComplexPoly::monomial(1), ComplexPoly({Complex(1.0), -std::conj(zeta)}),
                      PoleCheck::open_disk);
}

const std::vector<Complex> kZetas = {Complex(0.0),     Complex(0.3, 0.4), Complex(0.7),
                                     Complex(0.0, 0.8), Complex(1.0),
                                     std::polar(1.0, std::numbers::pi / 3.0)};

}  // namespace

TEST_CASE("pair constants satisfy the quadratic identities") {
    for (const Complex zeta : kZetas) {
        const auto [a, b] = pair_constants(zeta);
        CHECK(std::abs(a * b - std::conj(zeta)) < 1e-14);
        CHECK(std::abs(a * a + std::norm(b) - (2.0 + std::norm(zeta))) < 1e-13);
    }
    // zeta = 1 gives the golden ratio: A - B = 1 and a(1) = 0
    const auto [a1, b1] = pair_constants(Complex(1.0));
    CHECK(a1 - std::real(b1) == doctest::Approx(1.0));
    const PairBA p1 = PairBA::closed_form(Complex(1.0), 512, 64);
    CHECK(std::abs(p1.a()(Complex(1.0))) < 1e-10);
    // zeta = 0: (b, a) = (z/sqrt2, 1/sqrt2)
    const PairBA p0 = PairBA::closed_form(Complex(0.0), 512, 64);
    CHECK(std::abs(p0.a().coeff(0) - 1.0 / std::numbers::sqrt2) < 1e-14);
    CHECK(std::abs(p0.b().coeff(1) - 1.0 / std::numbers::sqrt2) < 1e-14);
    CHECK(std::abs(p0.b().coeff(0)) < 1e-14);
}

TEST_CASE("pair_from_phi reproduces the closed form") {
    for (const Complex zeta : kZetas) {
        const PairBA pp = PairBA::from_phi(phi_for(zeta), 4096, 128);
        const PairBA pc = PairBA::closed_form(zeta, 4096, 128);
        double sup = 0.0;
        for (int j = 0; j < 4096; j += 8) {
            sup = std::max(sup, std::abs(pp.a_samples()[j] - pc.a_samples()[j]));
            sup = std::max(sup, std::abs(pp.b_samples()[j] - pc.b_samples()[j]));
        }
        CHECK(sup < 1e-6);
        CHECK(pp.pair_identity_residual() < 1e-8);
        CHECK(pc.pair_identity_residual() < 1e-8);
        CHECK(pp.symbol_residual() < 1e-8);
        CHECK(pp.a0() > 0.0);
        CHECK(pp.sup_b() <= 1.0 + 1e-10);
    }
}

TEST_CASE("pair_from_phi edge symbols") {
    // phi = 0: a = 1, b = 0
    const PairBA trivial =
        PairBA::from_phi(RationalFn::from_poly(ComplexPoly::constant(0.0)), 256, 32);
    CHECK(trivial.a0() == doctest::Approx(1.0));
    CHECK(h2_norm_sq(trivial.b()) < 1e-26);

    // a pole inside the disk is rejected
    CHECK_THROWS_AS(PairBA::from_phi(RationalFn(ComplexPoly::constant(1.0),
                                                ComplexPoly({Complex(1.0), Complex(-2.0)}),
                                                PoleCheck::none),
                                     256, 32),
                    std::domain_error);

    // phi = z^2 c is fine as a pair, but its inner factor is not z
    const PairBA sq = PairBA::from_phi(RationalFn::from_poly(ComplexPoly::monomial(2)), 512, 64);
    CHECK(inner_factor_is_z_check(sq, default_inner_factor_grid()) == InnerFactorZ::no);
}

TEST_CASE("toeplitz action with a conjugate symbol") {
    const ComplexPoly f({Complex(1.0), Complex(2.0), Complex(0.0, 3.0)});
    // constant symbol: identity
    const ComplexPoly same = toeplitz_conj_apply(ComplexPoly::constant(1.0), f, 4);
    for (int n = 0; n <= 2; ++n) CHECK(same.coeff(n) == f.coeff(n));
    // h = z: backward shift
    const ComplexPoly shifted = toeplitz_conj_apply(ComplexPoly::monomial(1), f, 4);
    CHECK(shifted.coeff(0) == f.coeff(1));
    CHECK(shifted.coeff(1) == f.coeff(2));
    CHECK(shifted.coeff(2) == Complex(0.0));
    // kernels are eigenvectors: T_conj(h) k_w = conj(h(w)) k_w
    const Complex w(0.4, -0.3);
    const ComplexPoly k = cauchy_kernel(w, 128);
    const PairBA pair = PairBA::closed_form(Complex(0.5), 1024, 128);
    const ComplexPoly tk = toeplitz_conj_apply(pair.b(), k, 64);
    const Complex expect = std::conj(pair.b()(w));
    for (int n = 0; n <= 64; ++n)
        CHECK(std::abs(tk.coeff(n) - expect * k.coeff(n)) < 1e-10);
}

TEST_CASE("f_plus solves the pair equation") {
    // constants map to zero when b(0) = 0
    const PairBA p0 = PairBA::closed_form(Complex(0.0), 512, 64);
    const ComplexPoly zero = f_plus(ComplexPoly::constant(7.0), p0, 64);
    CHECK(h2_norm_sq(zero) < 1e-28);

    // f = z with phi = z: f+ = 1
    const ComplexPoly one = f_plus(ComplexPoly::monomial(1), p0, 64);
    CHECK(std::abs(one.coeff(0) - 1.0) < 1e-12);
    for (int n = 1; n <= 64; ++n) CHECK(std::abs(one.coeff(n)) < 1e-12);

    // kernels: f+ = conj(phi(w)) k_w, for every zeta in the family
    for (const Complex zeta : kZetas) {
        const PairBA pair = PairBA::from_phi(phi_for(zeta), 4096, 128);
        const RationalFn phi = phi_for(zeta);
        for (const Complex w : {Complex(0.5), Complex(-0.2, 0.6)}) {
            const ComplexPoly k = cauchy_kernel(w, 128);
            const ComplexPoly fp = f_plus(k, pair, 128);
            const Complex scale = std::conj(phi(w));
            for (int n = 0; n <= 64; ++n)
                CHECK(std::abs(fp.coeff(n) - scale * k.coeff(n)) < 1e-8);
        }
    }

    CHECK_THROWS_AS(f_plus(ComplexPoly::monomial(1), p0, 100), std::invalid_argument);
}

TEST_CASE("f_plus truncation stability") {
    for (const Complex zeta : {Complex(0.0), Complex(0.7), Complex(1.0)}) {
        const PairBA pair = PairBA::from_phi(phi_for(zeta), 4096, 160);
        const ComplexPoly f_lo = cauchy_kernel(Complex(0.62, 0.2), 128);
        const ComplexPoly f_hi = cauchy_kernel(Complex(0.62, 0.2), 160);
        const ComplexPoly g_lo = f_plus(f_lo, pair, 128);
        const ComplexPoly g_hi = f_plus(f_hi, pair, 160);
        for (int n = 0; n <= 96; ++n)
            CHECK(std::abs(g_lo.coeff(n) - g_hi.coeff(n)) < 1e-8);
    }
}

TEST_CASE("hb norm closed forms") {
    const PairBA p0 = PairBA::closed_form(Complex(0.0), 1024, 128);
    CHECK(hb_norm_sq(ComplexPoly::constant(1.0), p0) == doctest::Approx(1.0));
    CHECK(hb_norm_sq(ComplexPoly::monomial(1), p0) == doctest::Approx(2.0));
    // k_{1/2} with zeta = 0: 4/3 + (1/4)(4/3) = 5/3
    CHECK(std::abs(hb_norm_sq(cauchy_kernel(Complex(0.5), 128), p0) - 5.0 / 3.0) < 1e-8);
}

TEST_CASE("hb kernel") {
    const PairBA p0 = PairBA::closed_form(Complex(0.0), 512, 64);
    // b = 0 collapses to the Cauchy kernel
    const PairBA triv =
        PairBA::from_phi(RationalFn::from_poly(ComplexPoly::constant(0.0)), 256, 32);
    const Complex w(0.3, 0.2), z(0.5, -0.4);
    CHECK(std::abs(hb_kernel(triv, w, z) - 1.0 / (1.0 - std::conj(w) * z)) < 1e-12);
    CHECK(std::abs(hb_kernel(p0, Complex(0.0), Complex(0.0)) - 1.0) < 1e-14);
    // Hermitian symmetry
    CHECK(std::abs(hb_kernel(p0, w, z) - std::conj(hb_kernel(p0, z, w))) < 1e-14);
    CHECK_THROWS_AS(hb_kernel(p0, Complex(1.0), Complex(0.0)), std::invalid_argument);
}

TEST_CASE("nonextreme test") {
    // b from the zeta = 0 pair: |b|^2 = 1/2 on the circle, integral = -log 2
    const PairBA p0 = PairBA::closed_form(Complex(0.0), 1024, 64);
    const NonextremeResult r0 = is_nonextreme(p0, 1024);
    CHECK(r0.nonextreme);
    CHECK(r0.log_integral == doctest::Approx(-std::log(2.0)).epsilon(1e-6));

    // b = 0: integral of log(1) = 0
    const NonextremeResult rz = is_nonextreme(ComplexPoly::constant(0.0), 256);
    CHECK(rz.nonextreme);
    CHECK(rz.log_integral == doctest::Approx(0.0));

    // every pair in the family is non-extreme, with integral 2 log a(0)
    for (const Complex zeta : kZetas) {
        const PairBA pair = PairBA::closed_form(zeta, 4096, 128);
        const NonextremeResult r = is_nonextreme(pair, 4096);
        CHECK(r.nonextreme);
        CHECK(std::abs(r.log_integral - 2.0 * std::log(pair.a0())) < 0.05);
    }

    // inner b = z: 1 - |b|^2 = 0 on the whole grid, extreme
    const NonextremeResult ri = is_nonextreme(ComplexPoly::monomial(1), 512);
    CHECK_FALSE(ri.nonextreme);
}

TEST_CASE("inner factor check") {
    const auto grid = default_inner_factor_grid();
    for (const Complex zeta : kZetas)
        CHECK(inner_factor_is_z_check(PairBA::closed_form(zeta, 512, 64), grid) ==
              InnerFactorZ::yes);
    CHECK(inner_factor_is_z_check(ComplexPoly::constant(0.0), grid) ==
          InnerFactorZ::indeterminate);
    // constant-plus-z symbol: b(0) != 0
    CHECK(inner_factor_is_z_check(ComplexPoly({Complex(0.5), Complex(0.5)}), grid) ==
          InnerFactorZ::no);
}

TEST_CASE("hb kernel reproduces point evaluation in the pair inner product") {
    // <f, k^b_w>_{H(b)} = <f, k_w (1 - conj(b(w)) b)>_{H^2} + <f+, (k^b_w)+>_{H^2} = f(w)
    const int n = 128;
    const auto fam = random_poly_family(4, 7, 321);
    for (const Complex zeta : {Complex(0.5), Complex(0.3, 0.4), Complex(1.0)}) {
        const PairBA pair = PairBA::closed_form(zeta, 4096, n);
        for (const Complex w : {Complex(0.3), Complex(0.0, -0.5)}) {
            const ComplexPoly kb =
                (cauchy_kernel(w, n) * (ComplexPoly::constant(1.0) -
                                        pair.b() * std::conj(pair.b()(w))))
                    .truncated(n);
            const ComplexPoly kbp = f_plus(kb, pair, n);
            for (const auto& f : fam) {
                const ComplexPoly fp = f_plus(f, pair, n);
                const Complex value = h2_inner(f, kb) + h2_inner(fp, kbp);
                CHECK(std::abs(value - f(w)) < 1e-6);
            }
        }
    }
}

TEST_CASE("hb kernel gram matrices are positive semidefinite") {
    // spot check without an eigensolver: 2x2 principal minors of random pairs
    const auto pts = random_points_in_disk(40, 0.9, 123);
    for (const Complex zeta : {Complex(0.0), Complex(0.7), Complex(1.0)}) {
        const PairBA pair = PairBA::closed_form(zeta, 1024, 128);
        for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
            const Complex w1 = pts[i], w2 = pts[i + 1];
            const double d = std::real(hb_kernel(pair, w1, w1)) * std::real(hb_kernel(pair, w2, w2)) -
                             std::norm(hb_kernel(pair, w1, w2));
            CHECK(std::real(hb_kernel(pair, w1, w1)) > 0.0);
            CHECK(d > -1e-10);
        }
    }
}
