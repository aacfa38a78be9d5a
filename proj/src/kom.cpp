#include "contact/kom.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <sstream>

#include "contact/algebra.hpp"
#include "contact/gf2.hpp"
#include "contact/homs.hpp"

namespace contact {

std::vector<std::uint32_t> Complex::masks() const {
  std::vector<std::uint32_t> m;
  m.reserve(summands.size());
  for (const auto& s : summands) m.push_back(s.gamma.based_mask());
  return m;
}

Complex projective(const DividingSet& g, int h) {
  if (!g.is_basic()) throw NotBasic("projectives are indexed by basic sets");
  return Complex{g.n(), g.e(), {ProjSummand{g, h}}, {}};
}

namespace {

void require_same_category(const Complex& a, const Complex& b) {
  if (a.n != b.n || a.e != b.e) throw ShapeMismatch("complexes over different algebras");
}

std::vector<std::vector<int>> out_lists(const Entries& d, int size) {
  std::vector<std::vector<int>> out(size);
  for (auto [i, j] : d) out[i].push_back(j);
  return out;
}
std::vector<std::vector<int>> in_lists(const Entries& d, int size) {
  std::vector<std::vector<int>> in(size);
  for (auto [i, j] : d) in[j].push_back(i);
  return in;
}

std::string entries_defect(const Complex& a, const Complex& b, const Entries& f, int k, const char* what) {
  const auto ma = a.masks(), mb = b.masks();
  for (auto [i, j] : f) {
    if (i < 0 || i >= a.size() || j < 0 || j >= b.size()) return std::string(what) + " entry index out of range";
    if (b.summands[j].h != a.summands[i].h + k)
      return std::string(what) + " entry (" + std::to_string(i) + "," + std::to_string(j) + ") has the wrong degree";
    if (!tight_masks(ma[i], mb[j]))
      return std::string(what) + " entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not a basis element";
  }
  return {};
}

// Basis of degree-k maps C -> D.
struct MapSpace {
  std::vector<std::pair<int, int>> basis;
  std::map<std::pair<int, int>, int> index;
};

MapSpace map_space(const Complex& c, const Complex& d, int k) {
  MapSpace s;
  const auto mc = c.masks(), md = d.masks();
  for (int i = 0; i < c.size(); ++i)
    for (int j = 0; j < d.size(); ++j)
      if (d.summands[j].h == c.summands[i].h + k && tight_masks(mc[i], md[j])) {
        s.index[{i, j}] = static_cast<int>(s.basis.size());
        s.basis.emplace_back(i, j);
      }
  return s;
}

// Matrix of D: Map_k -> Map_{k+1}.
gf2::Matrix boundary_matrix(const Complex& c, const Complex& d, const MapSpace& from, const MapSpace& to) {
  gf2::Matrix m(to.basis.size(), from.basis.size());
  const auto mc = c.masks(), md = d.masks();
  const auto dout = out_lists(d.d, d.size());
  const auto cin = in_lists(c.d, c.size());
  for (std::size_t col = 0; col < from.basis.size(); ++col) {
    auto [i, j] = from.basis[col];
    for (int l : dout[j])
      if (tight_masks(mc[i], md[l])) m.flip(to.index.at({i, l}), col);
    for (int p : cin[i])
      if (tight_masks(mc[p], md[j])) m.flip(to.index.at({p, j}), col);
  }
  return m;
}

gf2::Vec to_vec(const MapSpace& s, const Entries& f) {
  gf2::Vec v(gf2::words(s.basis.size()), 0);
  for (const auto& p : f) {
    auto it = s.index.find(p);
    if (it == s.index.end()) throw ShapeMismatch("map entry outside the map space");
    gf2::flip(v, it->second);
  }
  return v;
}

Entries from_vec(const MapSpace& s, const gf2::Vec& v) {
  Entries f;
  for (std::size_t k = 0; k < s.basis.size(); ++k)
    if (gf2::get(v, k)) f.insert(s.basis[k]);
  return f;
}

std::pair<int, int> position_range(const Complex& c) {
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& s : c.summands) {
    lo = std::min(lo, s.h);
    hi = std::max(hi, s.h);
  }
  return {lo, hi};
}

}  // namespace

std::string complex_defect(const Complex& c) {
  for (const auto& s : c.summands) {
    if (!s.gamma.is_basic()) return "summand is not basic";
    if (s.gamma.n() != c.n || s.gamma.e() != c.e) return "summand outside C_{n,e}";
  }
  if (auto m = entries_defect(c, c, c.d, 1, "differential"); !m.empty()) return m;
  if (!compose_entries(c.masks(), c.d, c.d, c.masks()).empty()) return "d∘d ≠ 0";
  return {};
}

bool verify_complex(const Complex& c) { return complex_defect(c).empty(); }

std::string chain_map_defect(const ChainMap& f) {
  if (auto m = entries_defect(f.src, f.dst, f.f, f.k, "map"); !m.empty()) return m;
  const auto ms = f.src.masks(), md = f.dst.masks();
  Entries lhs = compose_entries(ms, f.f, f.dst.d, md);
  Entries rhs = compose_entries(ms, f.src.d, f.f, md);
  if (lhs != rhs) return "d'∘f ≠ f∘d";
  return {};
}

bool is_chain_map(const ChainMap& f) { return chain_map_defect(f).empty(); }

Entries compose_entries(const std::vector<std::uint32_t>& ma, const Entries& a, const Entries& b,
                        const std::vector<std::uint32_t>& mc) {
  std::map<int, std::vector<int>> bout;
  for (auto [j, l] : b) bout[j].push_back(l);
  std::map<std::pair<int, int>, int> acc;
  for (auto [i, j] : a) {
    auto it = bout.find(j);
    if (it == bout.end()) continue;
    for (int l : it->second)
      if (tight_masks(ma[i], mc[l])) acc[{i, l}] ^= 1;
  }
  Entries out;
  for (auto& [p, v] : acc)
    if (v) out.insert(p);
  return out;
}

Complex shift(const Complex& c, int s) {
  Complex out = c;
  for (auto& x : out.summands) x.h -= s;
  return out;
}

ChainMap compose(const ChainMap& f, const ChainMap& g) {
  require_same_category(f.src, g.dst);
  if (!(f.dst == g.src)) throw ShapeMismatch("compose: target of f differs from source of g");
  return ChainMap{f.src, g.dst, f.k + g.k, compose_entries(f.src.masks(), f.f, g.f, g.dst.masks())};
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst) || f.k != g.k) throw ShapeMismatch("add: maps of different shape");
  ChainMap out = f;
  for (const auto& p : g.f)
    if (!out.f.erase(p)) out.f.insert(p);
  return out;
}

ChainMap identity(const Complex& c) {
  ChainMap id{c, c, 0, {}};
  for (int i = 0; i < c.size(); ++i) id.f.insert({i, i});
  return id;
}

ChainMap zero_map(const Complex& c, const Complex& d, int k) { return ChainMap{c, d, k, {}}; }

ChainMap as_degree_zero(const ChainMap& f) { return ChainMap{f.src, shift(f.dst, f.k), 0, f.f}; }

Complex cone(const ChainMap& f) {
  if (f.k != 0) throw ShapeMismatch("cone needs a degree-0 map");
  require_same_category(f.src, f.dst);
  Complex out{f.src.n, f.src.e, {}, {}};
  const int a = f.src.size();
  for (const auto& s : f.src.summands) out.summands.push_back(ProjSummand{s.gamma, s.h - 1});
  for (const auto& s : f.dst.summands) out.summands.push_back(s);
  out.d = f.src.d;
  for (auto [i, j] : f.dst.d) out.d.insert({a + i, a + j});
  for (auto [i, j] : f.f) out.d.insert({i, a + j});
  return out;
}

ChainMap boundary(const Homotopy& h) {
  MapSpace from = map_space(h.src, h.dst, h.k), to = map_space(h.src, h.dst, h.k + 1);
  gf2::Matrix m = boundary_matrix(h.src, h.dst, from, to);
  gf2::Vec x = to_vec(from, h.f), y(gf2::words(to.basis.size()), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool bit = false;
    for (std::size_t w = 0; w < x.size(); ++w) bit ^= std::popcount(m.row(r)[w] & x[w]) & 1;
    if (bit) gf2::set(y, r);
  }
  return ChainMap{h.src, h.dst, h.k + 1, from_vec(to, y)};
}

int hom_dim(const Complex& c, const Complex& d, int k) {
  require_same_category(c, d);
  MapSpace prev = map_space(c, d, k - 1), cur = map_space(c, d, k), next = map_space(c, d, k + 1);
  if (cur.basis.empty()) return 0;
  const auto r_out = boundary_matrix(c, d, cur, next).rank();
  const auto r_in = boundary_matrix(c, d, prev, cur).rank();
  return static_cast<int>(cur.basis.size() - r_out - r_in);
}

int hom_total(const Complex& c, const Complex& d) {
  if (c.summands.empty() || d.summands.empty()) return 0;
  auto [clo, chi] = position_range(c);
  auto [dlo, dhi] = position_range(d);
  int total = 0;
  for (int k = dlo - chi; k <= dhi - clo; ++k) total += hom_dim(c, d, k);
  return total;
}

std::vector<ChainMap> hom_basis(const Complex& c, const Complex& d, int k) {
  require_same_category(c, d);
  MapSpace prev = map_space(c, d, k - 1), cur = map_space(c, d, k), next = map_space(c, d, k + 1);
  auto cocycles = boundary_matrix(c, d, cur, next).nullspace();
  gf2::Matrix in = boundary_matrix(c, d, prev, cur);
  std::vector<gf2::Vec> images;
  for (std::size_t col = 0; col < in.cols(); ++col) {
    gf2::Vec v(gf2::words(cur.basis.size()), 0);
    for (std::size_t r = 0; r < in.rows(); ++r)
      if (in.get(r, col)) gf2::set(v, r);
    images.push_back(std::move(v));
  }
  std::vector<ChainMap> out;
  for (const auto& v : gf2::complement_basis(images, cocycles, cur.basis.size()))
    out.push_back(ChainMap{c, d, k, from_vec(cur, v)});
  return out;
}

std::optional<Homotopy> find_homotopy(const ChainMap& f, const ChainMap& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst) || f.k != g.k) throw ShapeMismatch("find_homotopy: maps of different shape");
  MapSpace from = map_space(f.src, f.dst, f.k - 1), to = map_space(f.src, f.dst, f.k);
  gf2::Vec target = to_vec(to, add(f, g).f);
  if (gf2::is_zero(target)) return Homotopy{f.src, f.dst, f.k - 1, {}};
  if (from.basis.empty()) return std::nullopt;
  auto x = boundary_matrix(f.src, f.dst, from, to).solve(target);
  if (!x) return std::nullopt;
  return Homotopy{f.src, f.dst, f.k - 1, from_vec(from, *x)};
}

bool is_nullhomotopic(const ChainMap& f) { return find_homotopy(f, zero_map(f.src, f.dst, f.k)).has_value(); }

bool is_contractible(const Complex& c) { return is_nullhomotopic(identity(c)); }

bool is_homotopy_equivalence(const ChainMap& f) { return is_contractible(cone(as_degree_zero(f))); }

std::map<std::uint32_t, int> euler_char(const Complex& c) {
  std::map<std::uint32_t, int> chi;
  for (const auto& s : c.summands) chi[s.gamma.based_mask()] += (s.h % 2 == 0) ? 1 : -1;
  std::erase_if(chi, [](const auto& kv) { return kv.second == 0; });
  return chi;
}

Complex minimize(const Complex& c) {
  std::vector<ProjSummand> sum = c.summands;
  std::vector<std::uint32_t> mask = c.masks();
  std::vector<char> alive(sum.size(), 1);
  Entries d = c.d;
  for (;;) {
    auto it = std::find_if(d.begin(), d.end(), [&](const auto& p) { return mask[p.first] == mask[p.second]; });
    if (it == d.end()) break;
    auto [s, t] = *it;
    std::vector<int> into_t, from_s;
    for (auto [x, y] : d) {
      if (y == t && x != s) into_t.push_back(x);
      if (x == s && y != t) from_s.push_back(y);
    }
    for (int x : into_t)
      for (int y : from_s)
        if (tight_masks(mask[x], mask[y]) && !d.erase({x, y})) d.insert({x, y});
    std::erase_if(d, [&](const auto& p) { return p.first == s || p.first == t || p.second == s || p.second == t; });
    alive[s] = alive[t] = 0;
  }
  Complex out{c.n, c.e, {}, {}};
  std::vector<int> renum(sum.size(), -1);
  for (std::size_t i = 0; i < sum.size(); ++i)
    if (alive[i]) {
      renum[i] = out.size();
      out.summands.push_back(sum[i]);
    }
  for (auto [x, y] : d) out.d.insert({renum[x], renum[y]});
  return out;
}

std::optional<ChainMap> find_equivalence(const Complex& c, const Complex& d) {
  require_same_category(c, d);
  if (euler_char(c) != euler_char(d)) return std::nullopt;
  if (c.summands.empty() && d.summands.empty()) return zero_map(c, d, 0);
  auto basis = hom_basis(c, d, 0);
  if (basis.empty() || basis.size() > static_cast<std::size_t>(kEquivalenceSearchBits)) return std::nullopt;
  for (std::uint32_t bits = 1; bits < (1u << basis.size()); ++bits) {
    ChainMap f = zero_map(c, d, 0);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (bits >> k & 1u) f = add(f, basis[k]);
    if (is_homotopy_equivalence(f)) return f;
  }
  return std::nullopt;
}

bool equivalent(const Complex& c, const Complex& d) {
  require_same_category(c, d);
  Complex a = minimize(c), b = minimize(d);
  // Minimal complexes are equivalent only if they are isomorphic, so the summands must agree.
  auto shape = [](const Complex& x) {
    std::vector<std::pair<int, std::uint32_t>> s;
    for (const auto& p : x.summands) s.emplace_back(p.h, p.gamma.based_mask());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (shape(a) != shape(b)) return false;
  return find_equivalence(a, b).has_value();
}

std::optional<int> equivalent_up_to_shift(const Complex& c, const Complex& d) {
  require_same_category(c, d);
  Complex a = minimize(c), b = minimize(d);
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() == 0) return 0;
  // A minimal complex pins down its lowest position, so only one shift can work.
  auto low = [](const Complex& x) {
    int m = x.summands.front().h;
    for (const auto& p : x.summands) m = std::min(m, p.h);
    return m;
  };
  const int s = low(b) - low(a);
  if (equivalent(a, shift(b, s))) return s;
  return std::nullopt;
}

std::string describe(const Complex& c) {
  std::ostringstream os;
  os << "complex over R_{" << c.n << "," << c.e << "}:";
  for (int i = 0; i < c.size(); ++i) os << " [" << i << "] " << basic_name(c.summands[i].gamma) << "@" << c.summands[i].h;
  os << " | d:";
  for (auto [i, j] : c.d) os << " " << i << "->" << j;
  return os.str();
}

}  // namespace contact
