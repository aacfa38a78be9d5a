#pragma once
// Bypass moves, bypass triangles, the Serre rotation, canonical bypasses.

#include <array>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "contact/divset.hpp"

namespace contact {

struct InvalidMove : Error { using Error::Error; };
struct IsBasic : Error { using Error::Error; };

struct BypassMove {
  DividingSet source;
  NestVector uv;
  NestVector ov;
  int x = 0;
  int y = 0;
  int z = 0;

  auto key() const { return std::tie(uv, ov, x, y, z); }
  friend bool operator==(const BypassMove& a, const BypassMove& b) {
    return a.source == b.source && a.key() == b.key();
  }
  friend bool operator<(const BypassMove& a, const BypassMove& b) {
    if (!(a.source == b.source)) return a.source < b.source;
    return a.key() < b.key();
  }
};

// The six boundary points of the attaching hexagon, clockwise:
// aL, bL, cL, cR, bR, aR. Chords a=(aL,aR), b=(bL,bR), c=(cL,cR).
using Hexagon = std::array<int, 6>;

// Throws InvalidMove when the tuple is not realizable on its source.
Hexagon hexagon(const BypassMove& mv);
bool is_realizable(const BypassMove& mv);
BypassMove move_from_hexagon(const DividingSet& src, const Hexagon& h);

DividingSet attach(const DividingSet& g, const BypassMove& mv);
std::vector<BypassMove> enumerate_bypasses(const DividingSet& g);

std::vector<Label> left_part(const BypassMove& mv);
std::vector<Label> right_part(const BypassMove& mv);
// True iff i lies in the generalized interval [[x,y]].
bool in_generalized_interval(int x, int y, int i);
// The vertex map V(Γ) -> V(Γ') induced by the move.
std::map<NestVector, NestVector> vertex_map(const BypassMove& mv);
// The negative region between uv and ov that the attaching arc crosses.
int upper_region(const BypassMove& mv);

struct Triangle {
  std::array<DividingSet, 3> gamma;
  std::array<BypassMove, 3> beta;
};
Triangle triangle(const DividingSet& g, const BypassMove& mv);

int zero_region(const BypassMove& mv);

DividingSet serre_rotate(const DividingSet& g);

BypassMove canonical_bypass(const DividingSet& g);
std::pair<DividingSet, BypassMove> obar(const DividingSet& g);
// e+1-|Γ_STAR|, which vanishes exactly on basic sets.
int basic_distance(const DividingSet& g);

}  // namespace contact
