#include "contact/functor.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <memory>
#include <mutex>
#include <set>

#include "contact/homs.hpp"

namespace contact {

namespace {

std::uint32_t full_mask(int n) { return (n + 1 >= 32) ? ~0u : ((1u << (n + 1)) - 1u); }

int other_region(const DividingSet& g, int point, int self) {
  auto [r1, r2] = g.chord_regions(point);
  return r1 == self ? r2 : r1;
}

bool open_interval_contains(const std::vector<Label>& s, int lo, int hi) {
  return std::all_of(s.begin(), s.end(), [&](int x) { return lo < x && x < hi; });
}

// Generalized interval [[a,b]] on labels: wraps past n when a > b.
bool label_interval_contains(const std::vector<Label>& s, int a, int b) {
  return std::all_of(s.begin(), s.end(), [&](int x) { return a <= b ? (a <= x && x <= b) : (x <= b || x >= a); });
}

// Σ l_w over VNB components lying strictly inside (a,b).
int nested_length(const DividingSet& g, int a, int b) {
  int total = 0;
  for (const auto& [k, c] : g.components())
    if (open_interval_contains(c, a, b)) total += static_cast<int>(c.size()) - 1;
  return total;
}

std::unique_ptr<FData> make_fdata(const DividingSet& g) {
  auto fd = std::make_unique<FData>();
  fd->gamma = g;
  fd->tpv = g.TPV();
  const auto& T = fd->tpv;

  struct Raw {
    int h;
    OmittingIndex i;
  };
  std::vector<Raw> raw;
  std::vector<int> cur(T.size(), 0);
  for (;;) {
    OmittingIndex oi;
    for (std::size_t t = 0; t < T.size(); ++t) oi.entries[T[t]] = cur[t];
    raw.push_back({coh_degree(g, oi), oi});
    std::size_t t = 0;
    while (t < T.size() && cur[t] == g.l(T[t])) cur[t++] = 0;
    if (t == T.size()) break;
    ++cur[t];
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.h != b.h ? a.h > b.h : a.i < b.i; });

  fd->complex.n = g.n();
  fd->complex.e = g.e();
  for (const auto& r : raw) {
    std::uint32_t om = 0;
    for (const auto& [v, iv] : r.i.entries) om |= 1u << g.label(v, iv);
    fd->by_omitted[om] = static_cast<int>(fd->idx.size());
    fd->idx.push_back(r.i);
    fd->omitted.push_back(om);
    fd->h.push_back(r.h);
    fd->complex.summands.push_back(ProjSummand{basic_of_mask(g.n(), full_mask(g.n()) & ~om), -r.h});
  }
  for (std::size_t k = 0; k < fd->idx.size(); ++k)
    for (const auto& mv : differential_data(g, fd->idx[k])) fd->complex.d.insert({static_cast<int>(k), fd->index_of(mv.target)});
  return fd;
}

}  // namespace

int FData::index_of(const OmittingIndex& i) const {
  std::uint32_t om = 0;
  for (const auto& [v, iv] : i.entries) om |= 1u << gamma.label(v, iv);
  auto it = by_omitted.find(om);
  if (it == by_omitted.end()) throw IndexNotApplicable("omitting index not in OI(Γ)");
  return it->second;
}

const FData& f_data(const DividingSet& g) {
  static std::mutex mu;
  static std::map<DividingSet, std::unique_ptr<FData>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(g);
    if (it != cache.end()) return *it->second;
  }
  auto fresh = make_fdata(g);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace(g, std::move(fresh));
  return *it->second;
}

std::vector<OmittingIndex> omitting_indices(const DividingSet& g) { return f_data(g).idx; }

DividingSet gamma_of(const DividingSet& g, const OmittingIndex& i) {
  std::uint32_t based = full_mask(g.n());
  for (const auto& v : g.TPV()) based &= ~(1u << g.label(v, i.at(v)));
  return basic_of_mask(g.n(), based);
}

int coh_degree(const DividingSet& g, const OmittingIndex& i) {
  int h = 0;
  for (const auto& [v, iv] : i.entries) {
    h += iv;
    for (const auto& w : nesting_sets(g, v, iv).nv) h += g.l(w);
  }
  return h;
}

std::vector<DiffMove> differential_data(const DividingSet& g, const OmittingIndex& i) {
  std::vector<DiffMove> out;
  for (const auto& [v, iv] : i.entries) {
    if (iv == 0) continue;
    auto dnv = nesting_sets(g, v, iv).dnv;
    if (std::any_of(dnv.begin(), dnv.end(), [&](const NestVector& w) { return i.at(w) != 0; })) continue;
    DiffMove mv{v, i, !dnv.empty()};
    mv.target.entries[v] = iv - 1;
    for (const auto& w : dnv) mv.target.entries[w] = g.l(w);
    out.push_back(std::move(mv));
  }
  return out;
}

Complex build_F(const DividingSet& g) { return f_data(g).complex; }

std::vector<int> negative_regions(const DividingSet& g) {
  std::set<int> r;
  for (int s = 0; s <= g.n(); ++s) r.insert(g.region_of_arc(2 * s + 1));
  return {r.begin(), r.end()};
}

Entries negative_region_differential(const DividingSet& g, int region) {
  const FData& fd = f_data(g);
  Entries out;
  for (std::size_t k = 0; k < fd.idx.size(); ++k)
    for (const auto& mv : differential_data(g, fd.idx[k])) {
      // The move crosses the region beyond the chord between Γ_v(i_v - 1) and Γ_v(i_v).
      const int r = other_region(g, g.chord(mv.v, fd.idx[k].at(mv.v) - 1).first, g.region_of(mv.v));
      if (r == region) out.insert({static_cast<int>(k), fd.index_of(mv.target)});
    }
  return out;
}

namespace {

struct SplitContext {
  const DividingSet& g;
  const BypassMove& mv;
  std::vector<Label> U, O, L, R;
  SplitData data;

  SplitContext(const BypassMove& m) : g(m.source), mv(m) {
    U = g.component(mv.uv);
    O = g.component(mv.ov);
    L = left_part(mv);
    R = right_part(mv);
    const int nbar = upper_region(mv);
    for (const auto& w : g.TPV()) {
      if (w == mv.uv || w == mv.ov || g.l(w) == 0) continue;
      if (g.borders(w, nbar) && label_interval_contains(g.component(w), U[mv.y], O[mv.z])) data.lsv.push_back(w);
    }
    if (U[mv.y] < O[mv.z]) {
      data.type = ShuffleType::Y;
    } else {
      std::vector<Label> uo = U;
      uo.insert(uo.end(), O.begin(), O.end());
      for (const auto& w : data.lsv) {
        const auto& W = g.component(w);
        for (int k = 1; k < static_cast<int>(W.size()); ++k)
          if (open_interval_contains(uo, W[k - 1], W[k])) {
            data.type = ShuffleType::Z;
            data.wk = std::make_pair(w, k);
          }
      }
    }
  }

  bool contains(const std::vector<Label>& s, Label x) const { return std::find(s.begin(), s.end(), x) != s.end(); }
  bool zero_in_uv() const { return contains(U, 0); }

  bool is_identity(const OmittingIndex& i) const {
    return contains(L, 0) || (!zero_in_uv() && contains(L, U[i.at(mv.uv)]));
  }

  bool is_shuffling(const OmittingIndex& i) const {
    if (is_identity(i)) return false;
    if (mv.ov.empty() || data.type == ShuffleType::Neither) return false;
    if (i.at(mv.ov) != mv.z) return false;
    for (const auto& w : data.lsv) {
      const bool special = data.type == ShuffleType::Z && w == data.wk->first;
      if (special ? i.at(w) != data.wk->second : i.at(w) != 0) return false;
    }
    return true;
  }

  // Mask of omitted labels of β(i).
  std::uint32_t image_omitted(const OmittingIndex& i, std::uint32_t omitted) const {
    if (is_identity(i)) return omitted;
    if (!is_shuffling(i)) throw IndexNotApplicable("index lies in neither II(β) nor SI(β)");
    std::uint32_t out = 0;
    for (const auto& v : g.V()) {
      const auto& C = g.component(v);
      if (v == mv.uv) {
        out |= 1u << U[mv.y];
      } else if (v == mv.ov) {
        if (!contains(R, 0)) out |= 1u << U[i.at(mv.uv)];
      } else if (data.type == ShuffleType::Z && v == data.wk->first) {
        out |= 1u << C[data.wk->second - 1];
      } else if (std::find(data.lsv.begin(), data.lsv.end(), v) != data.lsv.end()) {
        out |= 1u << C.back();
      } else if (!v.empty()) {
        out |= 1u << C[i.at(v)];
      }
    }
    return out;
  }
};

}  // namespace

SplitData split_indices(const BypassMove& mv) {
  SplitContext ctx(mv);
  const FData& fd = f_data(mv.source);
  for (std::size_t k = 0; k < fd.idx.size(); ++k) {
    if (ctx.is_identity(fd.idx[k]))
      ctx.data.II.push_back(static_cast<int>(k));
    else if (ctx.is_shuffling(fd.idx[k]))
      ctx.data.SI.push_back(static_cast<int>(k));
  }
  return ctx.data;
}

OmittingIndex index_image(const BypassMove& mv, const OmittingIndex& i) {
  SplitContext ctx(mv);
  const FData& fd = f_data(mv.source);
  const FData& fd2 = f_data(attach(mv.source, mv));
  auto it = fd2.by_omitted.find(ctx.image_omitted(i, fd.omitted[fd.index_of(i)]));
  if (it == fd2.by_omitted.end()) throw InvariantViolation("β(i) is not an omitting index of the target");
  return fd2.idx[it->second];
}

ChainMap chain_map_F(const BypassMove& mv) {
  SplitContext ctx(mv);
  const FData& fd = f_data(mv.source);
  const FData& fd2 = f_data(attach(mv.source, mv));
  ChainMap f{fd.complex, fd2.complex, 0, {}};
  std::optional<int> k;
  for (std::size_t a = 0; a < fd.idx.size(); ++a) {
    const auto& i = fd.idx[a];
    if (!ctx.is_identity(i) && !ctx.is_shuffling(i)) continue;
    auto it = fd2.by_omitted.find(ctx.image_omitted(i, fd.omitted[a]));
    if (it == fd2.by_omitted.end()) throw InvariantViolation("β(i) is not an omitting index of the target");
    const int b = it->second;
    const int deg = fd.h[a] - fd2.h[b];
    if (k && *k != deg) throw InvariantViolation("F(β) is not homogeneous");
    k = deg;
    f.f.insert({static_cast<int>(a), b});
  }
  if (!k) throw InvariantViolation("II(β) ⊔ SI(β) is empty");
  f.k = *k;
  return f;
}

int deg_F(const BypassMove& mv) { return chain_map_F(mv).k; }

int deg_formula(const BypassMove& mv) {
  const DividingSet& g = mv.source;
  const auto& U = g.component(mv.uv);
  const auto& O = g.component(mv.ov);
  switch (zero_region(mv)) {
    case 1:
    case 2:
      return 0;
    case 3:
    case 4:
      return static_cast<int>(right_part(mv).size()) + nested_length(g, U[0], U[mv.x]);
    default:
      return 1 - static_cast<int>(left_part(mv).size()) - nested_length(g, U[mv.x], O[mv.z]);
  }
}

ChainMap gamma_chain_map(const Triangle& t) {
  SplitContext ctx(t.beta[0]);
  const FData& f1 = f_data(t.gamma[0]);
  const FData& f3 = f_data(t.gamma[2]);
  const int k = deg_F(t.beta[0]) + deg_F(t.beta[1]) - 1;
  ChainMap g{f1.complex, f3.complex, k, {}};
  const auto m1 = f1.complex.masks(), m3 = f3.complex.masks();
  for (std::size_t a = 0; a < f1.idx.size(); ++a) {
    if (ctx.is_identity(f1.idx[a])) continue;
    int found = -1;
    for (std::size_t b = 0; b < m3.size(); ++b)
      if (m3[b] == m1[a]) {
        if (found >= 0) throw InvariantViolation("γ: based set repeated in F(Γ'')");
        found = static_cast<int>(b);
      }
    if (found < 0) throw InvariantViolation("γ: no summand of F(Γ'') with the same based set");
    g.f.insert({static_cast<int>(a), found});
  }
  return g;
}

std::optional<std::vector<BypassMove>> morphism_decomposition(const DividingSet& g, const DividingSet& g2) {
  if (!hom_nonzero(g, g2)) return std::nullopt;
  std::map<DividingSet, std::pair<DividingSet, BypassMove>> parent;
  std::set<DividingSet> seen{g};
  std::deque<DividingSet> q{g};
  while (!q.empty()) {
    DividingSet x = q.front();
    q.pop_front();
    if (x == g2) break;
    for (const auto& mv : enumerate_bypasses(x)) {
      DividingSet y = attach(x, mv);
      if (seen.count(y) || !hom_nonzero(g, y) || !hom_nonzero(y, g2)) continue;
      seen.insert(y);
      parent.emplace(y, std::make_pair(x, mv));
      q.push_back(y);
    }
  }
  if (!seen.count(g2)) return std::nullopt;
  std::vector<BypassMove> path;
  for (DividingSet x = g2; !(x == g);) {
    const auto& [p, mv] = parent.at(x);
    path.push_back(mv);
    x = p;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<ChainMap> F_of_morphism(const DividingSet& g, const DividingSet& g2) {
  if (g == g2) return identity(build_F(g));
  auto path = morphism_decomposition(g, g2);
  if (!path) return std::nullopt;
  ChainMap f = chain_map_F(path->front());
  for (std::size_t k = 1; k < path->size(); ++k) f = compose(f, chain_map_F((*path)[k]));
  return f;
}

int canonical_grading_shift(const BypassMove& mv) { return deg_F(mv); }

Complex lift_F(const GradedObject& obj) { return shift(build_F(obj.gamma), obj.a); }

ChainMap lift_morphism(const BypassMove& mv, int a) {
  ChainMap f = chain_map_F(mv);
  return ChainMap{shift(f.src, a), shift(f.dst, a + f.k), 0, f.f};
}

namespace {

using Chord = std::pair<int, int>;
Chord make_chord(int p, int q) { return {std::min(p, q), std::max(p, q)}; }
// Chords a, b, c of a hexagon in role order.
std::array<Chord, 3> hexagon_chords(const Hexagon& h) {
  return {make_chord(h[0], h[5]), make_chord(h[1], h[4]), make_chord(h[2], h[3])};
}

// The move on `after` whose chords are the images of `mv`'s chords, role by role. A chord
// destroyed by the other bypass is replaced by the chord of `after` through endpoint side[k].
std::optional<BypassMove> transport(const BypassMove& mv, const DividingSet& after, const std::set<Chord>& destroyed,
                                    const std::map<Chord, int>& side) {
  auto want = hexagon_chords(hexagon(mv));
  for (auto& ch : want)
    if (destroyed.count(ch)) {
      const int p = side.at(ch);
      ch = make_chord(p, after.matching()[p]);
    }
  for (const auto& cand : enumerate_bypasses(after))
    if (hexagon_chords(hexagon(cand)) == want) return cand;
  return std::nullopt;
}

}  // namespace

std::vector<DisjointPair> disjoint_pairs(const DividingSet& g) {
  std::vector<DisjointPair> out;
  auto moves = enumerate_bypasses(g);
  for (std::size_t a = 0; a < moves.size(); ++a)
    for (std::size_t b = 0; b < moves.size(); ++b) {
      if (a == b) continue;
      auto c0 = hexagon_chords(hexagon(moves[a])), c1 = hexagon_chords(hexagon(moves[b]));
      std::set<Chord> s0(c0.begin(), c0.end()), s1(c1.begin(), c1.end());
      std::vector<Chord> shared;
      for (const auto& ch : s0)
        if (s1.count(ch)) shared.push_back(ch);
      if (shared.size() == 3) continue;
      const DividingSet g0 = attach(g, moves[a]), g1 = attach(g, moves[b]);
      // Each shared chord is crossed by both arcs; they sit on opposite sides of each other there.
      for (unsigned choice = 0; choice < (1u << shared.size()); ++choice) {
        std::map<Chord, int> side1, side0;
        for (std::size_t k = 0; k < shared.size(); ++k) {
          const bool first = choice >> k & 1u;
          side1[shared[k]] = first ? shared[k].first : shared[k].second;
          side0[shared[k]] = first ? shared[k].second : shared[k].first;
        }
        auto t1 = transport(moves[b], g0, s0, side1);
        auto t0 = transport(moves[a], g1, s1, side0);
        if (!t1 || !t0) continue;
        DividingSet target = attach(g0, *t1);
        if (!(attach(g1, *t0) == target)) continue;
        out.push_back(DisjointPair{moves[a], moves[b], *t1, *t0, g0, g1, target});
        break;
      }
    }
  return out;
}

}  // namespace contact
