#pragma once

#include <string>

#include "dhb/debranges.hpp"
#include "dhb/verify.hpp"
#include "dhb/weights.hpp"

namespace dhb {

/// JSON schemas:
///   rational / polynomial: {"num": [[re,im],...], "den": [[re,im],...]}
///                          (a polynomial is the same with "den": [[1,0]])
///   measure:               {"atoms": [{"point": [re,im], "mass": m}, ...]}
///   weight:                {"kind": "atomic", "atoms": [...]} | {"kind": "power", "alpha": a}
///   pair export:           {"phi": rational, "M": int, "N": int, "a": coeffs, "b": coeffs}
///   report:                {"checks": [{"name", "max_residual", "tolerance", "pass",
///                           "grid_meta", "wall_ms"}...], "config": {...},
///                           "suites": [...], "ops_exercised": [...]}
/// All decoders throw std::invalid_argument on malformed input.

RationalFn rational_from_json(const std::string& text, PoleCheck check = PoleCheck::closed_disk);
std::string rational_to_json(const RationalFn& r);

AtomicMeasure measure_from_json(const std::string& text);
SignedAtomicMeasure signed_measure_from_json(const std::string& text);
std::string measure_to_json(const AtomicMeasure& mu);

Weight weight_from_json(const std::string& text);

std::string pair_to_json(const PairBA& pair);

std::string coeffs_to_json(const ComplexPoly& p);

std::string report_to_json(const VerificationReport& rep, bool include_timing = true);
std::string report_to_csv(const VerificationReport& rep);

}  // namespace dhb
