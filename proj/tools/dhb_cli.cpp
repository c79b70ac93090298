// Command-line front end: Dirichlet integrals, pair construction, H(b) norms,
// Bergman/Berezin transforms, theorem verification suites and parameter scans.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "dhb/json_io.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

// inline JSON or a path to a JSON file
std::string load_payload(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open input file '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

dhb::Complex parse_complex(const std::string& s) {
    double re = 0.0, im = 0.0;
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) {
            re = std::stod(s);
        } else {
            re = std::stod(s.substr(0, comma));
            im = std::stod(s.substr(comma + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse complex number '" + s + "' (use re or re,im)");
    }
    return {re, im};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write to '" + out_path + "'");
    out << text;
}

void print_value(double v) { std::printf("%.12g\n", v); }

void print_value(dhb::Complex v) { std::printf("[%.12g, %.12g]\n", std::real(v), std::imag(v)); }

struct CommonOpts {
    dhb::VerifyConfig cfg;
    std::string out;
    std::string format = "json";
    std::string grid;
};

void add_rule_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--nr", o.cfg.n_r, "radial quadrature points");
    cmd->add_option("--ntheta", o.cfg.n_theta, "angular quadrature points");
}

void add_series_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--M", o.cfg.m_pair, "boundary grid size (power of two)");
    cmd->add_option("--N", o.cfg.n_trunc, "Taylor truncation degree");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted Dirichlet spaces and de Branges-Rovnyak spaces on the unit disk"};
    app.require_subcommand(1);
    CommonOpts o;

    // dirichlet: area-form weighted Dirichlet integral
    std::string f_json, weight_json, phi_json, measure_json, zeta_str, z_str;
    auto* cmd_dirichlet = app.add_subcommand("dirichlet", "D_w(f) by area quadrature");
    cmd_dirichlet->add_option("--f", f_json, "function as rational JSON")->required();
    cmd_dirichlet->add_option("--weight", weight_json, "weight JSON")->required();
    add_rule_flags(cmd_dirichlet, o);

    auto* cmd_local = app.add_subcommand("local", "local Dirichlet integral at zeta (boundary form)");
    cmd_local->add_option("--f", f_json, "function as rational JSON")->required();
    cmd_local->add_option("--zeta", zeta_str, "point in the closed disk (re or re,im)")->required();
    cmd_local->add_option("--M", o.cfg.m_boundary, "circle grid size");

    auto* cmd_pair = app.add_subcommand("pair", "construct the pair (b, a) from phi");
    cmd_pair->add_option("--phi", phi_json, "symbol as rational JSON")->required();
    add_series_flags(cmd_pair, o);
    cmd_pair->add_option("--out", o.out, "write JSON here instead of stdout");

    auto* cmd_fplus = app.add_subcommand("fplus", "solve T_conj(b) f = T_conj(a) f+");
    cmd_fplus->add_option("--f", f_json, "function as rational JSON")->required();
    cmd_fplus->add_option("--phi", phi_json, "symbol as rational JSON")->required();
    add_series_flags(cmd_fplus, o);

    auto* cmd_hbnorm = app.add_subcommand("hbnorm", "H(b) norm squared of f");
    cmd_hbnorm->add_option("--f", f_json, "function as rational JSON")->required();
    cmd_hbnorm->add_option("--phi", phi_json, "symbol as rational JSON")->required();
    add_series_flags(cmd_hbnorm, o);

    auto* cmd_bergman = app.add_subcommand("bergman", "Bergman projection Q w at z");
    cmd_bergman->add_option("--weight", weight_json, "weight JSON")->required();
    cmd_bergman->add_option("--z", z_str, "evaluation point (re or re,im)")->required();
    add_rule_flags(cmd_bergman, o);

    auto* cmd_berezin = app.add_subcommand("berezin", "Berezin transform B w at z");
    cmd_berezin->add_option("--weight", weight_json, "weight JSON")->required();
    cmd_berezin->add_option("--z", z_str, "evaluation point (re or re,im)")->required();
    add_rule_flags(cmd_berezin, o);

    std::vector<std::string> suites;
    std::optional<double> tol_override;
    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    cmd_verify
        ->add_option("suite", suites,
                     "norm-equality|dilation|douglas|qb|moments|phieqn|all")
        ->required();
    add_rule_flags(cmd_verify, o);
    cmd_verify->add_option("--M", o.cfg.m_boundary, "circle grid size");
    cmd_verify->add_option("--N", o.cfg.n_trunc, "Taylor truncation degree");
    cmd_verify->add_option("--seed", o.cfg.seed, "seed for the random families");
    double tol_tmp = 0.0;
    auto* tol_opt = cmd_verify->add_option("--tol", tol_tmp, "tolerance for --measure/--weight checks");
    cmd_verify->add_option("--grid", o.grid, "qb residual grid as RADIIxANGLES (default 15x16)");
    cmd_verify->add_option("--measure", measure_json,
                           "check this measure against the moment relation (moments suite)");
    cmd_verify->add_option("--weight", weight_json,
                           "check this weight against the Q/B identity (qb suite)");
    cmd_verify->add_option("--out", o.out, "write the report here instead of stdout");
    cmd_verify->add_option("--format", o.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string scan_what;
    auto* cmd_scan = app.add_subcommand("scan", "parameter sweeps, CSV tables");
    cmd_scan->add_option("what", scan_what, "qb|moments")
        ->required()
        ->check(CLI::IsMember({"qb", "moments"}));
    add_rule_flags(cmd_scan, o);
    cmd_scan->add_option("--out", o.out, "write the table here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tol_opt->count() > 0) tol_override = tol_tmp;
        if (!o.grid.empty()) {
            const auto x = o.grid.find('x');
            if (x == std::string::npos)
                throw std::invalid_argument("--grid expects RADIIxANGLES, e.g. 15x16");
            o.cfg.qb_radii = std::stoi(o.grid.substr(0, x));
            o.cfg.qb_angles = std::stoi(o.grid.substr(x + 1));
        }
        const dhb::DiskRule rule(o.cfg.n_r, o.cfg.n_theta);

        if (*cmd_dirichlet) {
            const auto f = dhb::rational_from_json(load_payload(f_json));
            const auto w = dhb::weight_from_json(load_payload(weight_json));
            print_value(dhb::dirichlet_area(f, w, rule).value);
            return 0;
        }
        if (*cmd_local) {
            const auto f = dhb::rational_from_json(load_payload(f_json));
            print_value(dhb::local_dirichlet(f, parse_complex(zeta_str), o.cfg.m_boundary).value);
            return 0;
        }
        if (*cmd_pair) {
            const auto phi =
                dhb::rational_from_json(load_payload(phi_json), dhb::PoleCheck::open_disk);
            emit(dhb::pair_to_json(dhb::PairBA::from_phi(phi, o.cfg.m_pair, o.cfg.n_trunc)),
                 o.out);
            return 0;
        }
        if (*cmd_fplus || *cmd_hbnorm) {
            const auto f = dhb::rational_from_json(load_payload(f_json));
            const auto phi =
                dhb::rational_from_json(load_payload(phi_json), dhb::PoleCheck::open_disk);
            const auto pair = dhb::PairBA::from_phi(phi, o.cfg.m_pair, o.cfg.n_trunc);
            const auto fp = dhb::rational_to_poly(f, o.cfg.n_trunc);
            if (*cmd_fplus)
                emit(dhb::coeffs_to_json(dhb::f_plus(fp, pair, o.cfg.n_trunc)), o.out);
            else
                print_value(dhb::hb_norm_sq(fp, pair));
            return 0;
        }
        if (*cmd_bergman) {
            const auto w = dhb::weight_from_json(load_payload(weight_json));
            print_value(dhb::bergman_projection(w, parse_complex(z_str), rule, o.cfg.qb_order));
            return 0;
        }
        if (*cmd_berezin) {
            const auto w = dhb::weight_from_json(load_payload(weight_json));
            print_value(dhb::berezin(w, parse_complex(z_str), rule, o.cfg.qb_order));
            return 0;
        }
        if (*cmd_verify) {
            dhb::VerificationReport rep;
            if (!measure_json.empty()) {
                const auto mu = dhb::signed_measure_from_json(load_payload(measure_json));
                rep.config = o.cfg;
                rep.suites = {"moments"};
                rep.checks.push_back(
                    dhb::check_measure_moments(mu, 8, 8, tol_override.value_or(1e-12)));
            } else if (!weight_json.empty()) {
                const auto w = dhb::weight_from_json(load_payload(weight_json));
                rep.config = o.cfg;
                rep.suites = {"qb"};
                rep.checks.push_back(dhb::check_weight_qb(w, o.cfg, tol_override.value_or(1e-3)));
            } else {
                rep = dhb::run_suites(suites, o.cfg);
            }
            emit(o.format == "csv" ? dhb::report_to_csv(rep) : dhb::report_to_json(rep), o.out);
            return rep.all_pass() ? 0 : kExitCheckFailed;
        }
        if (*cmd_scan) {
            const std::string table =
                scan_what == "qb" ? dhb::scan_qb_csv(o.cfg) : dhb::scan_moments_csv(o.cfg);
            emit(table, o.out);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return 0;
}
