#pragma once

// JSON serialization of the public data shapes (root data, affine elements,
// characters, GKM functions, reports, matrices).

#include "lweyl/center.hpp"

#include "json.hpp"

namespace lweyl {

using Json = nlohmann::json;

Json root_datum_to_json(const RootDatum& rd);
// validates against the same constraints as build()
RootDatum root_datum_from_json(const Json& j);

Json affine_element_to_json(const AffineWeyl& aw, const AffineElement& x);
Json character_to_json(const Character& ch);
Json gkm_function_to_json(const AffineWeyl& aw, const GkmFunction& f);
Json center_function_to_json(const CenterFunction& f, int nvars);
Json report_to_json(const GkmReport& rep);
Json matrix_to_json(const AffineWeyl& aw, const TranslationMatrix& H);
Json identity_lines_to_json(const std::vector<IdentityLine>& lines);

// weights print/parse as comma-separated fundamental coordinates
std::string weight_str(const Weight& w);
Weight parse_weight(const std::string& s, int rank);

}  // namespace lweyl
