#pragma once
// JSON and DOT serialization.

#include <string>

#include <json.hpp>

#include "contact/bypass.hpp"
#include "contact/divset.hpp"
#include "contact/kom.hpp"

namespace contact {

struct ParseError : Error { using Error::Error; };

nlohmann::json nest_to_json(const NestVector& v);
NestVector nest_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DividingSet& g);
// Accepts the component schema or {"n","e","matching":[...]}. Throws ParseError on shape
// errors and InvalidDividingSet / EulerMismatch on semantic ones.
DividingSet dividing_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BypassMove& mv);
// {"uv","ov","x","y","z"} on the given source.
BypassMove bypass_from_json(const DividingSet& src, const nlohmann::json& j);

nlohmann::json to_json(const Complex& c);
Complex complex_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ChainMap& f);

std::string matching_id(const DividingSet& g);
std::string bypass_graph_dot(int n, int e);
std::string triangle_dot(const Triangle& t);

}  // namespace contact
