#include "dhb/json_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <stdexcept>

namespace dhb {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
    return j;
}

Complex complex_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("expected a complex number as [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json complex_to(Complex z) { return json::array({std::real(z), std::imag(z)}); }

ComplexPoly poly_from(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected coefficients [[re,im],...]");
    std::vector<Complex> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(complex_from(e));
    return ComplexPoly(std::move(c));
}

json poly_to(const ComplexPoly& p) {
    json j = json::array();
    for (const auto& c : p.coeffs()) j.push_back(complex_to(c));
    return j;
}

}  // namespace

RationalFn rational_from_json(const std::string& text, PoleCheck check) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("num"))
        throw std::invalid_argument("rational function JSON needs a \"num\" field");
    ComplexPoly num = poly_from(j.at("num"));
    ComplexPoly den = j.contains("den") ? poly_from(j.at("den")) : ComplexPoly::constant(1.0);
    return RationalFn(std::move(num), std::move(den), check);
}

std::string rational_to_json(const RationalFn& r) {
    json j;
    j["num"] = poly_to(r.num());
    j["den"] = poly_to(r.den());
    return j.dump();
}

namespace {

template <typename AtomT>
std::vector<AtomT> atoms_from(const json& j) {
    if (!j.is_object() || !j.contains("atoms") || !j.at("atoms").is_array())
        throw std::invalid_argument("measure JSON needs an \"atoms\" array");
    std::vector<AtomT> atoms;
    for (const auto& e : j.at("atoms")) {
        if (!e.is_object() || !e.contains("point") || !e.contains("mass"))
            throw std::invalid_argument("each atom needs \"point\" and \"mass\"");
        atoms.push_back(AtomT{complex_from(e.at("point")), e.at("mass").get<double>()});
    }
    return atoms;
}

}  // namespace

AtomicMeasure measure_from_json(const std::string& text) {
    return AtomicMeasure(atoms_from<Atom>(parse(text)));
}

SignedAtomicMeasure signed_measure_from_json(const std::string& text) {
    return SignedAtomicMeasure(atoms_from<SignedAtom>(parse(text)));
}

std::string measure_to_json(const AtomicMeasure& mu) {
    json atoms = json::array();
    for (const auto& a : mu.atoms())
        atoms.push_back({{"point", complex_to(a.zeta)}, {"mass", a.mass}});
    return json{{"atoms", atoms}}.dump();
}

Weight weight_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("weight JSON needs a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "atomic") return Weight::superharmonic(AtomicMeasure(atoms_from<Atom>(j)));
    if (kind == "power") {
        if (!j.contains("alpha")) throw std::invalid_argument("power weight needs \"alpha\"");
        return Weight::power(j.at("alpha").get<double>());
    }
    if (kind == "sampled")
        throw std::invalid_argument("sampled weights cannot be built from JSON (API only)");
    throw std::invalid_argument("unknown weight kind '" + kind + "'");
}

std::string pair_to_json(const PairBA& pair) {
    json j;
    j["phi"] = {{"num", poly_to(pair.phi().num())}, {"den", poly_to(pair.phi().den())}};
    j["M"] = pair.grid_size();
    j["N"] = pair.truncation();
    j["a"] = poly_to(pair.a());
    j["b"] = poly_to(pair.b());
    return j.dump();
}

std::string coeffs_to_json(const ComplexPoly& p) {
    return json{{"coeffs", poly_to(p)}}.dump();
}

std::string report_to_json(const VerificationReport& rep, bool include_timing) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json jc;
        jc["name"] = c.name;
        jc["max_residual"] = c.max_residual;
        jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        jc["grid_meta"] = c.grid_meta;
        if (include_timing) jc["wall_ms"] = c.wall_ms;
        checks.push_back(jc);
    }
    json cfg;
    cfg["n_r"] = rep.config.n_r;
    cfg["n_theta"] = rep.config.n_theta;
    cfg["M"] = rep.config.m_boundary;
    cfg["M_pair"] = rep.config.m_pair;
    cfg["N"] = rep.config.n_trunc;
    cfg["qb_order"] = rep.config.qb_order;
    cfg["seed"] = rep.config.seed;
    cfg["tol_algebraic"] = rep.config.tol_algebraic;
    cfg["tol_quadrature"] = rep.config.tol_quadrature;
    cfg["tol_boundary_atom"] = rep.config.tol_boundary_atom;
    json j;
    j["checks"] = checks;
    j["config"] = cfg;
    j["suites"] = rep.suites;
    j["ops_exercised"] = rep.ops_exercised;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& rep) {
    std::string csv = "name,max_residual,tolerance,pass\n";
    char row[512];
    for (const auto& c : rep.checks) {
        std::snprintf(row, sizeof row, "%s,%.17g,%.17g,%d\n", c.name.c_str(), c.max_residual,
                      c.tolerance, c.pass ? 1 : 0);
        csv += row;
    }
    return csv;
}

}  // namespace dhb
