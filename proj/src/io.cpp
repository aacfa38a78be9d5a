#include "contact/io.hpp"

#include <set>
#include <sstream>

namespace contact {

using nlohmann::json;

json nest_to_json(const NestVector& v) {
  if (v.empty()) return "*";
  return json(v);
}

NestVector nest_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "*") throw ParseError("nest vector string must be \"*\"");
    return STAR;
  }
  if (!j.is_array() || j.empty()) throw ParseError("nest vector must be \"*\" or a nonempty integer array");
  NestVector v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("nest vector entries must be integers");
    v.push_back(x.get<int>());
  }
  return v;
}

json to_json(const DividingSet& g) {
  json comps = json::array();
  for (const auto& [v, labels] : g.components()) comps.push_back({{"v", nest_to_json(v)}, {"labels", labels}});
  return {{"n", g.n()}, {"e", g.e()}, {"components", comps}};
}

DividingSet dividing_set_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("dividing set must be a JSON object");
    const int n = j.at("n").get<int>();
    const int e = j.at("e").get<int>();
    if (n < 0 || n > 30) throw ParseError("n out of range");
    if (j.contains("matching")) return DividingSet::from_matching(j.at("matching").get<Matching>(), n, e);
    ComponentMap comps;
    for (const auto& c : j.at("components")) {
      NestVector v = nest_from_json(c.at("v"));
      if (comps.count(v)) throw InvalidDividingSet("duplicate component key " + to_string(v));
      comps[v] = c.at("labels").get<std::vector<Label>>();
    }
    return DividingSet::from_components(n, e, comps);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed dividing set: ") + ex.what());
  }
}

json to_json(const BypassMove& mv) {
  return {{"uv", nest_to_json(mv.uv)}, {"ov", nest_to_json(mv.ov)}, {"x", mv.x}, {"y", mv.y}, {"z", mv.z}};
}

BypassMove bypass_from_json(const DividingSet& src, const json& j) {
  try {
    BypassMove mv{src, nest_from_json(j.at("uv")), nest_from_json(j.at("ov")), j.at("x").get<int>(), j.at("y").get<int>(),
                  j.at("z").get<int>()};
    hexagon(mv);
    return mv;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed bypass: ") + ex.what());
  }
}

json to_json(const Complex& c) {
  json s = json::array();
  for (const auto& x : c.summands) s.push_back({{"gamma", to_json(x.gamma)}, {"h", x.h}});
  json d = json::array();
  for (auto [i, j] : c.d) d.push_back({i, j});
  return {{"n", c.n}, {"e", c.e}, {"summands", s}, {"d", d}};
}

Complex complex_from_json(const json& j) {
  try {
    Complex c;
    for (const auto& s : j.at("summands")) c.summands.push_back(ProjSummand{dividing_set_from_json(s.at("gamma")), s.at("h").get<int>()});
    if (!c.summands.empty()) {
      c.n = c.summands.front().gamma.n();
      c.e = c.summands.front().gamma.e();
    }
    if (j.contains("n")) c.n = j.at("n").get<int>();
    if (j.contains("e")) c.e = j.at("e").get<int>();
    for (const auto& p : j.at("d")) {
      if (!p.is_array() || p.size() != 2) throw ParseError("differential entries must be [i, j] pairs");
      c.d.insert({p[0].get<int>(), p[1].get<int>()});
    }
    return c;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed complex: ") + ex.what());
  }
}

json to_json(const ChainMap& f) {
  json e = json::array();
  for (auto [i, j] : f.f) e.push_back({i, j});
  return {{"src", to_json(f.src)}, {"dst", to_json(f.dst)}, {"k", f.k}, {"f", e}};
}

std::string matching_id(const DividingSet& g) {
  std::ostringstream os;
  os << "m";
  for (int p : g.matching()) os << "_" << p;
  return os.str();
}

std::string bypass_graph_dot(int n, int e) {
  std::ostringstream os;
  os << "graph bypass_" << n << "_" << e << " {\n";
  auto objs = enumerate_objects(n, e);
  for (const auto& g : objs) os << "  " << matching_id(g) << " [label=\"" << describe(g) << "\"];\n";
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& g : objs)
    for (const auto& mv : enumerate_bypasses(g)) {
      std::string a = matching_id(g), b = matching_id(attach(g, mv));
      if (b < a) std::swap(a, b);
      edges.insert({a, b});
    }
  for (const auto& [a, b] : edges) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string triangle_dot(const Triangle& t) {
  std::ostringstream os;
  os << "digraph triangle {\n";
  for (const auto& g : t.gamma) os << "  " << matching_id(g) << " [label=\"" << describe(g) << "\"];\n";
  for (int k = 0; k < 3; ++k)
    os << "  " << matching_id(t.gamma[k]) << " -> " << matching_id(t.gamma[(k + 1) % 3]) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace contact
