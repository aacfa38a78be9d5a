#pragma once
// Worked examples and helpers to read complexes and maps by summand name.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "contact/algebra.hpp"
#include "contact/bypass.hpp"
#include "contact/functor.hpp"
#include "contact/kom.hpp"

namespace fixtures {

using namespace contact;

// C_{2,1}: the non-basic set, F = P(1) -> P(2).
inline DividingSet c21_nonbasic() { return DividingSet::from_components(2, 1, {{STAR, {0}}, {{1}, {1, 2}}}); }
// C_{4,3}: P(1,2,4) -> P(1,3,4) -> P(2,3,4).
inline DividingSet c43_chain() { return DividingSet::from_components(4, 3, {{STAR, {0, 4}}, {{1}, {1, 2, 3}}}); }
// C_{4,2}: P(1,3) -> P(1,4) + P(2,3) -> P(2,4).
inline DividingSet c42_square() { return DividingSet::from_components(4, 2, {{STAR, {0}}, {{1}, {1, 2}}, {{2}, {3, 4}}}); }
// C_{4,2}: P(1,2) -> P(1,3) -> P(2,4) -> P(3,4).
inline DividingSet c42_nested() { return DividingSet::from_components(4, 2, {{STAR, {0}}, {{1}, {1, 4}}, {{1, 1}, {2, 3}}}); }
// C_{5,2}: P(1,3) -> P(1,4) -> P(3,5) -> P(4,5).
inline DividingSet c52_nested() {
  return DividingSet::from_components(5, 2, {{STAR, {0}}, {{1}, {1, 5}}, {{1, 1}, {2}}, {{1, 2}, {3, 4}}});
}

inline BypassMove nested_y_move() { return BypassMove{c42_nested(), {1, 1}, {1}, 1, 1, 1}; }
inline BypassMove nested_z_move() { return BypassMove{c52_nested(), {1, 2}, {1, 1}, 1, 1, 0}; }
// The disjoint pair with ov(β0) = uv(β1).
inline BypassMove commuting_b0() { return BypassMove{c52_nested(), {1}, {1, 2}, 0, 0, 0}; }
inline BypassMove commuting_b1() { return nested_z_move(); }

// Summands as (name, position), in complex order.
inline std::vector<std::pair<std::string, int>> summand_names(const Complex& c) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& s : c.summands) out.emplace_back(basic_name(s.gamma), s.h);
  return out;
}

using NamedEntries = std::set<std::pair<std::string, std::string>>;

inline NamedEntries named(const Complex& src, const Complex& dst, const Entries& f) {
  NamedEntries out;
  for (auto [i, j] : f) out.insert({basic_name(src.summands[i].gamma), basic_name(dst.summands[j].gamma)});
  return out;
}
inline NamedEntries named(const Complex& c) { return named(c, c, c.d); }
inline NamedEntries named(const ChainMap& f) { return named(f.src, f.dst, f.f); }

}  // namespace fixtures
