#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dhb/bergman.hpp"
#include "dhb/debranges.hpp"
#include "dhb/dirichlet.hpp"

namespace dhb {

struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;  // always max_residual <= tolerance
    std::string grid_meta;
    double wall_ms = 0.0;
};

struct VerifyConfig {
    int n_r = 400;
    int n_theta = 2048;
    int m_boundary = 2048;  // Douglas / circle grid
    int m_pair = 4096;      // pair construction grid
    int n_trunc = 128;      // Taylor truncation
    int qb_order = 256;     // Bergman/Berezin moment order
    std::uint64_t seed = 7;
    double tol_algebraic = 1e-8;     // closed-form vs closed-form
    double tol_quadrature = 1e-4;    // quadrature vs closed-form
    double tol_boundary_atom = 1e-3; // boundary-atom quadrature
    int qb_radii = 15;
    int qb_angles = 16;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    VerifyConfig config;
    std::vector<std::string> suites;
    std::vector<std::string> ops_exercised;
    bool all_pass() const;
};

/// Seeded degree-`degree` polynomials with coefficients uniform on the complex
/// square [-1,1] x [-1,1]; reproducible across platforms.
std::vector<ComplexPoly> random_poly_family(int count, int degree, std::uint64_t seed);
std::vector<Complex> random_points_in_disk(int count, double radius, std::uint64_t seed);

/// The zeta test set {0, 0.3+0.4i, 0.7, 0.8i, 1, e^{i pi/3}}.
std::vector<Complex> zeta_test_set();
/// 25 points w with |w| <= 0.9 (5 moduli x 5 angles).
std::vector<Complex> w_test_grid();

std::vector<CheckResult> verify_norm_equality(const VerifyConfig& cfg,
                                              std::vector<std::string>& ops);
std::vector<CheckResult> verify_dilation(const VerifyConfig& cfg, std::vector<std::string>& ops);
std::vector<CheckResult> verify_douglas(const VerifyConfig& cfg, std::vector<std::string>& ops);
std::vector<CheckResult> verify_qb(const VerifyConfig& cfg, std::vector<std::string>& ops);
std::vector<CheckResult> verify_moments(const VerifyConfig& cfg, std::vector<std::string>& ops);
std::vector<CheckResult> verify_phieqn(const VerifyConfig& cfg, std::vector<std::string>& ops);

/// Known suite names in declaration order: norm-equality, dilation, douglas,
/// qb, moments, phieqn. "all" expands to the full list.
std::vector<std::string> all_suite_names();
VerificationReport run_suites(const std::vector<std::string>& names, const VerifyConfig& cfg);

/// Residual of a single measure against the moment relation (pass iff Dirac-like).
CheckResult check_measure_moments(const SignedAtomicMeasure& mu, int m_max, int n_max,
                                  double tol);
/// Residual of a single weight against the Q/B identity.
CheckResult check_weight_qb(const Weight& w, const VerifyConfig& cfg, double tol);

/// Parameter sweeps (CSV tables) behind the open questions: two-atom mixtures
/// against the Q/B identity, and signed two-atom measures against the moment
/// relation. Evidence only; no characterization is claimed.
std::string scan_qb_csv(const VerifyConfig& cfg);
std::string scan_moments_csv(const VerifyConfig& cfg);

}  // namespace dhb
