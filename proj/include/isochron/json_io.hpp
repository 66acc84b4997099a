#pragma once

#include <string>

#include "json.hpp"

#include "isochron/conditions.hpp"
#include "isochron/lie_analysis.hpp"
#include "isochron/numverify.hpp"
#include "isochron/prenormal.hpp"

namespace isochron {

/// Insertion-ordered, so dumps follow the field order written here and a
/// parse/dump cycle reproduces the bytes.
using Json = nlohmann::ordered_json;

/// {"xi_sign": "+", "degree": d, "coefficients": [{"i": 2, "j": 0, "value": "1/1+0/1i"}, ...]}
/// Unknown keys, duplicate exponents and out-of-range exponents throw InputError.
PlanarField field_from_json(const Json& j);
PlanarField parse_field(const std::string& text);
Json to_json(const PlanarField& f);

/// {"i,j": "a/b+c/di", ...} in graded order.
Json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const Json& j);

/// {"dx": {...}, "dy": {...}, "letter": "(n1,n2)"}; letter omitted when absent.
Json to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j);

Json to_json(const SeriesReport& r);
Json to_json(const ResonanceReport& r);
Json to_json(const PrenormalReport& r);
Json to_json(const ConditionVerdict& v);
Json to_json(const PeriodScan& s);
Json to_json(ConditionId id, int degree, const GeomComplexity& g);

/// {"kind": "random", "seed": u64, "support": "resonant" | "all"} or
/// {"kind": "table", "entries": [{"word": "(1,0)·(0,1)", "value": "1/2+0/1i"}]}.
Mould mould_from_json(const Json& j);

std::string to_string(ProofBasis p);

/// Parses JSON text, converting parse failures to InputError.
Json parse_json(const std::string& text);

}  // namespace isochron
