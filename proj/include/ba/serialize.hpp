#pragma once

#include <string>

#include <json.hpp>

#include "ba/ba_constructor.hpp"
#include "ba/operator.hpp"
#include "ba/verifier.hpp"

namespace ba::io {

using json = nlohmann::ordered_json;

std::string sha256_hex(const std::string& text);

json to_json(const algebra::Rational& q);
json to_json(const algebra::ConfigVector& v);
json to_json(const algebra::Poly& p);  // {"text", "sha256", "terms": [{"k", "u", "c"}]}
json to_json(const ops::DifferenceOperator& d);
json to_json(const config::Configuration& c);
json to_json(const construct::BAResult& r);
json summary_json(const construct::BAResult& r);
json to_json(const verify::CheckReport& r, bool timing);

algebra::Rational rational_from_json(const json& j);
// Accepts {"family", "n", "l", "m", "mults"} or explicit {"weights", "entries"};
// when both are present the entries must reproduce the family.
config::Configuration configuration_from_json(const json& j);
// Term-list form produced by to_json(Poly).
algebra::Poly poly_from_json(const json& j);

// Sums of terms like "3/2*κ1^2*κ2", "kappa1", and "k2" for (k,k).
algebra::KPoly parse_kpoly(const std::string& text, const config::Configuration& c);

}  // namespace ba::io
