// Serre functor on the algebra side: resolutions of rotated projectives and the induced
// transform of complexes as a twisted complex.

#include <algorithm>

#include "contact/bypass.hpp"
#include "contact/functor.hpp"
#include "contact/homs.hpp"
#include "contact/kom.hpp"

namespace contact {

Complex serre_resolution(const DividingSet& g) {
  if (!g.is_basic()) throw NotBasic("serre_resolution needs a basic set");
  const int n = g.n();
  if (n == 0 || (g.based_mask() >> 1 & 1u)) return projective(serre_rotate(g));
  // SΓ_w = {s_1 - 1, ..., s_e - 1, n}; SΓ^i omits its i-th label and sits at position -i.
  std::vector<Label> w;
  for (Label s : g.component(STAR))
    if (s != 0) w.push_back(s - 1);
  w.push_back(n);
  std::uint32_t all = 1u;
  for (Label s : w) all |= 1u << s;
  Complex out{n, g.e(), {}, {}};
  const int e = static_cast<int>(w.size()) - 1;
  for (int i = e; i >= 0; --i) out.summands.push_back(ProjSummand{basic_of_mask(n, all & ~(1u << w[i])), -i});
  for (int k = 0; k + 1 < out.size(); ++k) out.d.insert({k, k + 1});
  return out;
}

namespace {

// Summands of `sub` sit at offset..offset+sub.size()-1 of the total complex.
struct Block {
  int offset = 0;
  Complex sub;
};

}  // namespace

Complex serre_transform(const Complex& c) {
  Complex total{c.n, c.e, {}, {}};
  std::vector<Block> blocks;
  std::vector<DividingSet> rotated;
  for (const auto& s : c.summands) {
    rotated.push_back(serre_rotate(s.gamma));
    Complex r = shift(build_F(rotated.back()), -s.h);
    Block b{total.size(), r};
    for (const auto& x : r.summands) total.summands.push_back(x);
    for (auto [i, j] : r.d) total.d.insert({b.offset + i, b.offset + j});
    blocks.push_back(std::move(b));
  }

  // Gap-one components: the functor image of each rotated differential entry.
  Entries off;
  for (auto [a, b] : c.d) {
    auto f = F_of_morphism(rotated[a], rotated[b]);
    if (!f) throw InvariantViolation("Serre image of a differential entry vanishes");
    if (f->k != 0) throw InvariantViolation("Serre image of a differential entry has nonzero degree");
    for (auto [i, j] : f->f) off.insert({blocks[a].offset + i, blocks[b].offset + j});
  }

  // Higher components: solve D0 X + X D0 = Σ D_i D_{g-i} one block pair at a time.
  std::vector<int> block_of(total.size());
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (int i = 0; i < blocks[a].sub.size(); ++i) block_of[blocks[a].offset + i] = static_cast<int>(a);
  int max_gap = 0;
  for (const auto& x : c.summands)
    for (const auto& y : c.summands) max_gap = std::max(max_gap, y.h - x.h);
  const auto masks = total.masks();
  for (int gap = 2; gap <= max_gap; ++gap) {
    Entries sq = compose_entries(masks, off, off, masks);
    for (std::size_t a = 0; a < blocks.size(); ++a)
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (c.summands[b].h - c.summands[a].h != gap) continue;
        ChainMap rhs{blocks[a].sub, blocks[b].sub, 2, {}};
        for (auto [i, j] : sq)
          if (block_of[i] == static_cast<int>(a) && block_of[j] == static_cast<int>(b))
            rhs.f.insert({i - blocks[a].offset, j - blocks[b].offset});
        if (rhs.f.empty()) continue;
        auto y = find_homotopy(rhs, zero_map(rhs.src, rhs.dst, 2));
        if (!y) throw InvariantViolation("Serre twisted complex has an obstruction");
        for (auto [i, j] : y->f) off.insert({blocks[a].offset + i, blocks[b].offset + j});
      }
  }
  for (const auto& p : off) total.d.insert(p);
  if (auto why = complex_defect(total); !why.empty()) throw InvariantViolation("Serre transform: " + why);
  return minimize(total);
}

}  // namespace contact
