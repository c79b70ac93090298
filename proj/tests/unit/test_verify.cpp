#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "dhb/json_io.hpp"
#include "dhb/verify.hpp"

using namespace dhb;

namespace {

// cheaper grids for the structural tests; the acceptance binary runs defaults
VerifyConfig reduced() {
    VerifyConfig cfg;
    cfg.n_r = 150;
    cfg.n_theta = 1024;
    cfg.m_boundary = 1024;
    cfg.m_pair = 2048;
    cfg.n_trunc = 96;
    cfg.qb_order = 256;
    return cfg;
}

}  // namespace

TEST_CASE("random family is reproducible and in range") {
    const auto a = random_poly_family(5, 10, 7);
    const auto b = random_poly_family(5, 10, 7);
    const auto c = random_poly_family(5, 10, 8);
    REQUIRE(a.size() == 5);
    CHECK(a[0].degree() == 10);
    bool same = true, differs = false;
    for (int i = 0; i < 5; ++i)
        for (int n = 0; n <= 10; ++n) {
            same = same && a[std::size_t(i)].coeff(n) == b[std::size_t(i)].coeff(n);
            differs = differs || a[std::size_t(i)].coeff(n) != c[std::size_t(i)].coeff(n);
            CHECK(std::abs(std::real(a[std::size_t(i)].coeff(n))) <= 1.0);
            CHECK(std::abs(std::imag(a[std::size_t(i)].coeff(n))) <= 1.0);
        }
    CHECK(same);
    CHECK(differs);
}

TEST_CASE("suites pass, cover the module operations, and serialize deterministically") {
    const VerifyConfig cfg = reduced();
    const VerificationReport rep = run_suites({"all"}, cfg);

    for (const auto& c : rep.checks) {
        INFO(c.name, ": residual=", c.max_residual, " tol=", c.tolerance, " [", c.grid_meta, "]");
        CHECK(c.pass);
        CHECK(c.pass == (c.max_residual <= c.tolerance));
    }
    CHECK(rep.all_pass());
    CHECK(rep.suites == all_suite_names());

    // every operation of the weights, dirichlet and debranges modules shows up
    for (const char* op :
         {"eval_weight", "l1_norm", "bergman_projection", "berezin", "qb_residual",
          "moment_residual", "dirichlet_area", "local_dirichlet", "dirichlet_measure",
          "dnorm_sq", "dilation_ratio", "pair_from_phi", "pair_closed_form",
          "toeplitz_conj_apply", "f_plus", "hb_norm_sq", "hb_kernel", "is_nonextreme",
          "inner_factor_is_z_check"}) {
        INFO("missing op ", op);
        CHECK(std::find(rep.ops_exercised.begin(), rep.ops_exercised.end(), op) !=
              rep.ops_exercised.end());
    }

    // determinism: a second run serializes to the same bytes without timing
    const VerificationReport rep2 = run_suites({"all"}, cfg);
    CHECK(report_to_json(rep, false) == report_to_json(rep2, false));
    CHECK(report_to_csv(rep) == report_to_csv(rep2));

    // fixed declaration order no matter how suites are requested
    const VerificationReport sub1 = run_suites({"qb", "dilation"}, cfg);
    const VerificationReport sub2 = run_suites({"dilation", "qb"}, cfg);
    CHECK(report_to_json(sub1, false) == report_to_json(sub2, false));
    CHECK(sub1.suites == std::vector<std::string>{"dilation", "qb"});

    CHECK_THROWS_AS(run_suites({"nope"}, cfg), std::invalid_argument);
}

TEST_CASE("single-input checks") {
    const SignedAtomicMeasure two(
        {SignedAtom{Complex(0.0), 0.5}, SignedAtom{Complex(0.5), 0.5}});
    const CheckResult bad = check_measure_moments(two, 8, 8, 1e-12);
    CHECK_FALSE(bad.pass);
    CHECK(bad.max_residual == doctest::Approx(1.0 / 16.0));

    const SignedAtomicMeasure dirac({SignedAtom{Complex(0.5, 0.1), 3.0}});
    CHECK(check_measure_moments(dirac, 8, 8, 1e-12).pass);

    VerifyConfig cfg = reduced();
    const Weight atom = Weight::superharmonic(AtomicMeasure::dirac(Complex(0.7)));
    CHECK(check_weight_qb(atom, cfg, 1e-3).pass);
    const Weight mix = Weight::superharmonic(
        AtomicMeasure({Atom{Complex(0.0), 1.0}, Atom{Complex(0.5), 1.0}}));  // auto-normalized
    const CheckResult mixed = check_weight_qb(mix, cfg, 1e-3);
    CHECK_FALSE(mixed.pass);
    CHECK(mixed.max_residual > 1e-3);
}

TEST_CASE("scanners emit well-formed tables") {
    VerifyConfig cfg = reduced();
    cfg.n_r = 120;
    cfg.n_theta = 512;

    const std::string qb = scan_qb_csv(cfg);
    std::istringstream qs(qb);
    std::string header;
    std::getline(qs, header);
    CHECK(header == "t,z0_re,z0_im,z1_re,z1_im,qb_residual");
    int rows = 0, pure_atoms_small = 0, mixtures_large = 0;
    for (std::string line; std::getline(qs, line);) {
        ++rows;
        const auto comma = line.rfind(',');
        const double residual = std::stod(line.substr(comma + 1));
        const double t = std::stod(line.substr(0, line.find(',')));
        if (t == 0.0 || t == 1.0) pure_atoms_small += residual < 1e-3;
        if (t == 0.5) mixtures_large += residual > 1e-6;
    }
    CHECK(rows == 4 * 9);
    CHECK(pure_atoms_small == 8);  // endpoints are single atoms and satisfy the identity
    CHECK(mixtures_large == 4);    // every two-atom mixture is detected

    const std::string mo = scan_moments_csv(cfg);
    std::istringstream ms(mo);
    std::getline(ms, header);
    CHECK(header == "m0,m1,z0_re,z0_im,z1_re,z1_im,moment_residual");
    rows = 0;
    for (std::string line; std::getline(ms, line);) ++rows;
    CHECK(rows == 4 * 5);

    CHECK(scan_qb_csv(cfg) == scan_qb_csv(cfg));  // deterministic
}
