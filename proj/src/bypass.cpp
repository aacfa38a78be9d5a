#include "contact/bypass.hpp"

#include <algorithm>

namespace contact {

namespace {
int index_in(const std::vector<Label>& c, Label s) {
  auto it = std::find(c.begin(), c.end(), s);
  if (it == c.end()) throw InvalidMove("label not in component");
  return static_cast<int>(it - c.begin());
}
int other_region(const DividingSet& g, int point, int self) {
  auto [r1, r2] = g.chord_regions(point);
  return r1 == self ? r2 : r1;
}
}  // namespace

Hexagon hexagon(const BypassMove& mv) {
  const DividingSet& g = mv.source;
  if (!g.has(mv.uv) || !g.has(mv.ov)) throw InvalidMove("uv or ov is not a component");
  if (mv.uv == mv.ov) throw InvalidMove("uv = ov");
  const auto& U = g.component(mv.uv);
  const auto& O = g.component(mv.ov);
  const int L = static_cast<int>(U.size()), Lo = static_cast<int>(O.size());
  if (L < 2) throw InvalidMove("uv is boundary parallel");
  if (mv.x < 0 || mv.x >= L || mv.y < 0 || mv.y >= L || mv.z < 0 || mv.z >= Lo)
    throw InvalidMove("x, y or z out of range");
  const int p = (mv.x - 1 + L) % L, q = mv.y, j = (mv.z - 1 + Lo) % Lo;
  if (p == q) throw InvalidMove("attaching arc enters and leaves uv through the same chord");
  const int N = other_region(g, g.chord(mv.uv, q).first, g.region_of(mv.uv));
  auto [c1, c2] = g.chord_regions(g.chord(mv.ov, j).first);
  if (c1 != N && c2 != N) throw InvalidMove("uv and ov are not adjacent across the arc's negative region");
  return {2 * U[(p + 1) % L], 2 * U[q] + 1, 2 * O[(j + 1) % Lo], 2 * O[j] + 1, 2 * U[(q + 1) % L], 2 * U[p] + 1};
}

bool is_realizable(const BypassMove& mv) {
  try {
    hexagon(mv);
    return true;
  } catch (const InvalidMove&) {
    return false;
  }
}

BypassMove move_from_hexagon(const DividingSet& src, const Hexagon& h) {
  BypassMove mv;
  mv.source = src;
  mv.uv = src.key_of_label(h[0] / 2);
  mv.ov = src.key_of_label(h[2] / 2);
  mv.x = index_in(src.component(mv.uv), h[0] / 2);
  mv.y = index_in(src.component(mv.uv), (h[1] - 1) / 2);
  mv.z = index_in(src.component(mv.ov), h[2] / 2);
  if (hexagon(mv) != h) throw InvalidMove("hexagon is not the attaching region of a bypass");
  return mv;
}

DividingSet attach(const DividingSet& g, const BypassMove& mv) {
  Hexagon h = hexagon(mv);
  Matching m = g.matching();
  auto pair = [&](int a, int b) {
    m[a] = b;
    m[b] = a;
  };
  pair(h[0], h[1]);
  pair(h[2], h[5]);
  pair(h[3], h[4]);
  return DividingSet::from_matching(m, g.n(), g.e());
}

std::vector<BypassMove> enumerate_bypasses(const DividingSet& g) {
  std::vector<BypassMove> out;
  for (const auto& uv : g.V()) {
    const int L = g.l(uv) + 1;
    if (L < 2) continue;
    const int self = g.region_of(uv);
    for (int p = 0; p < L; ++p)
      for (int q = 0; q < L; ++q) {
        if (p == q) continue;
        const int N = other_region(g, g.chord(uv, q).first, self);
        for (const auto& ov : g.V()) {
          if (ov == uv) continue;
          const int Lo = g.l(ov) + 1;
          for (int j = 0; j < Lo; ++j) {
            auto [c1, c2] = g.chord_regions(g.chord(ov, j).first);
            if (c1 != N && c2 != N) continue;
            out.push_back(BypassMove{g, uv, ov, (p + 1) % L, q, (j + 1) % Lo});
          }
        }
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_generalized_interval(int x, int y, int i) { return x <= y ? (x <= i && i <= y) : (i <= y || i >= x); }

std::vector<Label> left_part(const BypassMove& mv) {
  std::vector<Label> out;
  const auto& U = mv.source.component(mv.uv);
  for (int i = 0; i < static_cast<int>(U.size()); ++i)
    if (in_generalized_interval(mv.x, mv.y, i)) out.push_back(U[i]);
  return out;
}

std::vector<Label> right_part(const BypassMove& mv) {
  std::vector<Label> out;
  const auto& U = mv.source.component(mv.uv);
  for (int i = 0; i < static_cast<int>(U.size()); ++i)
    if (!in_generalized_interval(mv.x, mv.y, i)) out.push_back(U[i]);
  return out;
}

std::map<NestVector, NestVector> vertex_map(const BypassMove& mv) {
  DividingSet t = attach(mv.source, mv);
  std::map<NestVector, NestVector> out;
  for (const auto& v : mv.source.V()) {
    Label s = v == mv.uv ? left_part(mv).front() : mv.source.component(v).front();
    out[v] = t.key_of_label(s);
  }
  return out;
}

int upper_region(const BypassMove& mv) {
  const DividingSet& g = mv.source;
  return other_region(g, g.chord(mv.uv, mv.y).first, g.region_of(mv.uv));
}

Triangle triangle(const DividingSet& g, const BypassMove& mv) {
  Triangle t;
  t.gamma[0] = g;
  t.beta[0] = mv;
  for (int k = 0; k < 2; ++k) {
    t.gamma[k + 1] = attach(t.gamma[k], t.beta[k]);
    Hexagon h = hexagon(t.beta[k]);
    t.beta[k + 1] = move_from_hexagon(t.gamma[k + 1], {h[4], h[5], h[0], h[1], h[2], h[3]});
  }
  if (!(attach(t.gamma[2], t.beta[2]) == g)) throw InvariantViolation("bypass triangle does not close up");
  return t;
}

int zero_region(const BypassMove& mv) {
  Hexagon h = hexagon(mv);
  const int N = 2 * mv.source.n() + 2;
  for (int i = 0; i < 6; ++i) {
    int a = h[i], b = h[(i + 1) % 6];
    // Arc 0 lies in the clockwise segment [a, b).
    if ((N - a) % N < ((b - a) % N + N) % N) return (i + 1) % 6 + 1;
  }
  throw InvariantViolation("label 0 arc not found in any hexagon segment");
}

DividingSet serre_rotate(const DividingSet& g) {
  const int n = g.n();
  std::vector<std::vector<Label>> blocks;
  for (auto& [k, b] : g.components()) {
    std::vector<Label> r;
    for (Label s : b) r.push_back((s + n) % (n + 1));
    blocks.push_back(r);
  }
  return DividingSet::from_blocks(n, blocks);
}

BypassMove canonical_bypass(const DividingSet& g) {
  if (g.is_basic()) throw IsBasic("canonical bypass needs a non-basic dividing set");
  NestVector uv;
  for (const auto& v : g.VNB())
    if (v.size() == 1) {
      uv = v;
      break;
    }
  if (uv.empty()) throw InvariantViolation("non-basic set without a first-level non-boundary-parallel component");
  const int l = g.l(uv);
  // The outer chord faces STAR; the attaching arc leaves uv through it.
  const int N = other_region(g, g.chord(uv, l).first, g.region_of(uv));
  const int Ls = g.l(STAR) + 1;
  for (int j = 0; j < Ls; ++j) {
    auto [c1, c2] = g.chord_regions(g.chord(STAR, j).first);
    if (c1 == N || c2 == N) return BypassMove{g, uv, STAR, 1, l, (j + 1) % Ls};
  }
  throw InvariantViolation("no STAR chord bounds the region outside uv");
}

std::pair<DividingSet, BypassMove> obar(const DividingSet& g) {
  Triangle t = triangle(g, canonical_bypass(g));
  return {t.gamma[2], t.beta[2]};
}

int basic_distance(const DividingSet& g) { return g.e() + 1 - static_cast<int>(g.component(STAR).size()); }

}  // namespace contact
