#include "contact/divset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace contact {

std::string to_string(const NestVector& v) {
  if (v.empty()) return "*";
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

bool directly_nests(const NestVector& w, const NestVector& v) {
  return w.size() == v.size() + 1 && std::equal(v.begin(), v.end(), w.begin());
}

Matching matching_of_blocks(int n, const std::vector<std::vector<Label>>& blocks) {
  Matching m(2 * n + 2, -1);
  for (auto b : blocks) {
    std::sort(b.begin(), b.end());
    const size_t k = b.size();
    for (size_t j = 0; j < k; ++j) {
      int a = 2 * b[j] + 1, c = 2 * b[(j + 1) % k];
      m[a] = c;
      m[c] = a;
    }
  }
  return m;
}

bool is_valid_matching(const Matching& m) {
  const int N = static_cast<int>(m.size());
  if (N == 0 || N % 2) return false;
  for (int a = 0; a < N; ++a) {
    if (m[a] < 0 || m[a] >= N || m[a] == a || m[m[a]] != a) return false;
  }
  for (int a = 0; a < N; ++a) {
    int b = m[a];
    if (b < a) continue;
    for (int c = a + 1; c < b; ++c)
      if (m[c] < a || m[c] > b) return false;
  }
  return true;
}

void DividingSet::build_from_matching(const Matching& m, int n, int e) {
  if (static_cast<int>(m.size()) != 2 * n + 2 || !is_valid_matching(m))
    throw InvalidDividingSet("not a crossingless matching on " + std::to_string(2 * n + 2) + " points");
  const int N = 2 * n + 2;
  n_ = n;
  e_ = e;
  m_ = m;

  // Positive components: cycles of b -> m(2b+1)/2.
  std::vector<int> block_of(n + 1, -1);
  std::vector<std::vector<Label>> blocks;
  for (int b = 0; b <= n; ++b) {
    if (block_of[b] >= 0) continue;
    std::vector<Label> cyc;
    for (int x = b; block_of[x] < 0; x = m[2 * x + 1] / 2) {
      block_of[x] = static_cast<int>(blocks.size());
      cyc.push_back(x);
    }
    std::sort(cyc.begin(), cyc.end());
    blocks.push_back(cyc);
  }
  if (static_cast<int>(blocks.size()) != n - e + 1)
    throw EulerMismatch("matching has " + std::to_string(blocks.size()) +
                        " positive components, expected " + std::to_string(n - e + 1));

  arc_region_.assign(N, -1);
  regions_.clear();
  for (int p = 0; p < N; ++p) {
    if (arc_region_[p] >= 0) continue;
    std::vector<int> cyc;
    for (int q = p; arc_region_[q] < 0; q = m[(q + 1) % N]) {
      arc_region_[q] = static_cast<int>(regions_.size());
      cyc.push_back(q);
    }
    regions_.push_back(cyc);
  }

  const int R = static_cast<int>(regions_.size());
  std::vector<std::set<int>> adj(R);
  for (int q = 0; q < N; ++q) {
    auto [r1, r2] = chord_regions(q);
    adj[r1].insert(r2);
    adj[r2].insert(r1);
  }
  std::vector<int> block_of_region(R, -1);
  for (size_t b = 0; b < blocks.size(); ++b) block_of_region[arc_region_[2 * blocks[b][0]]] = static_cast<int>(b);

  // Walk the dual tree from the based region.
  std::vector<NestVector> key(blocks.size());
  std::vector<int> parent_neg(blocks.size(), -1);
  std::vector<int> stack{block_of[0]};
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    int r = arc_region_[2 * blocks[b][0]];
    std::vector<int> kids;
    for (int nr : adj[r]) {
      if (nr == parent_neg[b]) continue;
      for (int pr : adj[nr]) {
        if (pr == r) continue;
        int c = block_of_region[pr];
        parent_neg[c] = nr;
        kids.push_back(c);
      }
    }
    std::sort(kids.begin(), kids.end(), [&](int a, int c) { return blocks[a][0] < blocks[c][0]; });
    for (size_t t = 0; t < kids.size(); ++t) {
      key[kids[t]] = key[b];
      key[kids[t]].push_back(static_cast<int>(t) + 1);
      stack.push_back(kids[t]);
    }
  }
  comps_.clear();
  label_key_.assign(n + 1, {});
  for (size_t b = 0; b < blocks.size(); ++b) {
    comps_[key[b]] = blocks[b];
    for (Label s : blocks[b]) label_key_[s] = key[b];
  }
}

DividingSet DividingSet::from_matching(const Matching& m, int n, int e) {
  DividingSet ds;
  ds.build_from_matching(m, n, e);
  return ds;
}

DividingSet DividingSet::from_blocks(int n, const std::vector<std::vector<Label>>& blocks) {
  int e = n + 1 - static_cast<int>(blocks.size());
  return from_matching(matching_of_blocks(n, blocks), n, e);
}

DividingSet DividingSet::from_components(int n, int e, const ComponentMap& comps) {
  auto rep = validate(n, e, comps);
  if (!rep.ok) {
    std::string msg = "invalid dividing set:";
    for (auto& v : rep.violations) msg += " [" + v + "]";
    throw InvalidDividingSet(msg);
  }
  std::vector<std::vector<Label>> blocks;
  for (auto& [k, b] : comps) blocks.push_back(b);
  return from_matching(matching_of_blocks(n, blocks), n, e);
}

std::vector<NestVector> DividingSet::V() const {
  std::vector<NestVector> out;
  for (auto& [k, b] : comps_) out.push_back(k);
  return out;
}

std::vector<NestVector> DividingSet::TPV() const {
  std::vector<NestVector> out;
  for (auto& [k, b] : comps_)
    if (!k.empty()) out.push_back(k);
  return out;
}

std::vector<NestVector> DividingSet::VNB() const {
  std::vector<NestVector> out;
  for (auto& [k, b] : comps_)
    if (!k.empty() && b.size() > 1) out.push_back(k);
  return out;
}

const std::vector<Label>& DividingSet::component(const NestVector& v) const {
  auto it = comps_.find(v);
  if (it == comps_.end()) throw IndexOutOfRange("no component " + to_string(v));
  return it->second;
}

Label DividingSet::label(const NestVector& v, int i) const {
  const auto& c = component(v);
  if (i < 0 || i >= static_cast<int>(c.size()))
    throw IndexOutOfRange("label index " + std::to_string(i) + " out of range for " + to_string(v));
  return c[i];
}

bool DividingSet::is_basic() const {
  for (auto& [k, b] : comps_)
    if (!k.empty() && b.size() > 1) return false;
  return true;
}

std::uint32_t DividingSet::based_mask() const {
  std::uint32_t mask = 0;
  for (Label s : component(STAR)) mask |= 1u << s;
  return mask;
}

int DividingSet::region_of(const NestVector& v) const { return arc_region_[2 * component(v)[0]]; }

std::pair<int, int> DividingSet::chord_regions(int q) const {
  const int N = 2 * n_ + 2;
  return {arc_region_[(q - 1 + N) % N], arc_region_[q]};
}

std::pair<int, int> DividingSet::chord(const NestVector& v, int j) const {
  const auto& c = component(v);
  const int k = static_cast<int>(c.size());
  return {2 * c[j] + 1, 2 * c[(j + 1) % k]};
}

bool DividingSet::borders(const NestVector& v, int region) const {
  const int k = static_cast<int>(component(v).size());
  for (int j = 0; j < k; ++j) {
    auto [r1, r2] = chord_regions(chord(v, j).first);
    if (r1 == region || r2 == region) return true;
  }
  return false;
}

std::vector<NestVector> DividingSet::components_bordering(int region) const {
  std::vector<NestVector> out;
  for (auto& [k, b] : comps_)
    if (borders(k, region)) out.push_back(k);
  return out;
}

ValidationReport validate(int n, int e, const ComponentMap& comps) {
  ValidationReport rep;
  auto fail = [&](std::string s) {
    rep.ok = false;
    rep.violations.push_back(std::move(s));
  };
  if (n < 0 || e < 0 || e > n) {
    fail("parameters: need 0 <= e <= n");
    return rep;
  }
  for (auto& [k, b] : comps) {
    for (int t : k)
      if (t <= 0) fail("nest vector " + to_string(k) + " has a non-positive entry");
    if (b.empty()) fail("component " + to_string(k) + " is empty");
    if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end())
      fail("component " + to_string(k) + " is not strictly ascending");
  }
  // (1)
  if (static_cast<int>(comps.size()) != n - e + 1)
    fail("(1) |V| = " + std::to_string(comps.size()) + ", expected n-e+1 = " + std::to_string(n - e + 1));
  // (2)
  auto star = comps.find(STAR);
  if (star == comps.end())
    fail("(2) STAR missing");
  else if (std::find(star->second.begin(), star->second.end(), 0) == star->second.end())
    fail("(2) label 0 not in STAR");
  // (5)
  std::vector<int> seen(n + 1, 0);
  bool range_ok = true;
  for (auto& [k, b] : comps)
    for (Label s : b) {
      if (s < 0 || s > n) {
        range_ok = false;
        continue;
      }
      seen[s]++;
    }
  if (!range_ok) fail("(5) label out of range [0,n]");
  for (int s = 0; s <= n; ++s)
    if (seen[s] != 1) {
      fail("(5) components do not partition {0..n}");
      break;
    }
  // (3) and (4)
  for (auto& [k, b] : comps) {
    if (k.empty() || b.empty()) continue;
    NestVector par(k.begin(), k.end() - 1);
    auto pit = comps.find(par);
    if (pit == comps.end()) {
      fail("(3) parent of " + to_string(k) + " missing");
      continue;
    }
    const auto& pv = pit->second;
    bool inside = false;
    for (size_t i = 0; i < pv.size(); ++i) {
      int lo = pv[i], hi = i + 1 < pv.size() ? pv[i + 1] : n + 1;
      if (std::all_of(b.begin(), b.end(), [&](int s) { return lo < s && s < hi; })) inside = true;
    }
    if (!inside) fail("(3) " + to_string(k) + " not inside one gap of its parent");
    int t = k.back();
    for (int u = 1; u < t; ++u) {
      NestVector sib = par;
      sib.push_back(u);
      auto sit = comps.find(sib);
      if (sit == comps.end()) {
        fail("(4) " + to_string(sib) + " missing below " + to_string(k));
      } else if (!sit->second.empty() && sit->second.back() >= b.front()) {
        fail("(4) siblings " + to_string(sib) + " and " + to_string(k) + " out of clockwise order");
      }
    }
  }
  if (!rep.ok) return rep;
  // Embedding: the partition is realized by a crossingless matching with these keys.
  std::vector<std::vector<Label>> blocks;
  for (auto& [k, b] : comps) blocks.push_back(b);
  Matching m = matching_of_blocks(n, blocks);
  if (!is_valid_matching(m)) {
    fail("(embedding) partition is crossing");
    return rep;
  }
  DividingSet ds = DividingSet::from_matching(m, n, e);
  if (ds.components() != comps) fail("(embedding) nest vectors disagree with the nesting of the matching");
  return rep;
}

ValidationReport validate(const DividingSet& ds) { return validate(ds.n(), ds.e(), ds.components()); }

Matching to_matching(const DividingSet& ds) { return ds.matching(); }

namespace {
void nc_matchings(int lo, int hi, Matching& m, const std::function<void()>& emit) {
  if (lo >= hi) {
    emit();
    return;
  }
  if (m[lo] >= 0) {
    nc_matchings(lo + 1, hi, m, emit);
    return;
  }
  for (int k = lo + 1; k < hi; k += 2) {
    m[lo] = k;
    m[k] = lo;
    // The inside (lo,k) must be matched first; recurse over both parts.
    std::function<void()> outer = [&] { nc_matchings(k + 1, hi, m, emit); };
    nc_matchings(lo + 1, k, m, outer);
    m[lo] = m[k] = -1;
  }
}
}  // namespace

std::vector<DividingSet> enumerate_objects(int n, int e) {
  std::vector<DividingSet> out;
  if (n < 0 || e < 0 || e > n) return out;
  const int N = 2 * n + 2;
  Matching m(N, -1);
  nc_matchings(0, N, m, [&] {
    std::vector<char> seen(n + 1, 0);
    int blocks = 0;
    for (int b = 0; b <= n; ++b) {
      if (seen[b]) continue;
      ++blocks;
      for (int x = b; !seen[x]; x = m[2 * x + 1] / 2) seen[x] = 1;
    }
    if (blocks == n - e + 1) out.push_back(DividingSet::from_matching(m, n, e));
  });
  std::sort(out.begin(), out.end());
  return out;
}

DividingSet basic_of(int n, int e, const std::vector<Label>& based) {
  std::set<Label> S(based.begin(), based.end());
  if (!S.count(0) || static_cast<int>(S.size()) != e + 1 || S.size() != based.size() || *S.rbegin() > n || *S.begin() < 0)
    throw BadBase("basic set needs 0 in S and |S| = e+1 within {0..n}");
  std::vector<std::vector<Label>> blocks{std::vector<Label>(S.begin(), S.end())};
  for (int s = 0; s <= n; ++s)
    if (!S.count(s)) blocks.push_back({s});
  return DividingSet::from_blocks(n, blocks);
}

DividingSet basic_of_mask(int n, std::uint32_t mask) {
  std::vector<Label> S;
  for (int s = 0; s <= n; ++s)
    if (mask >> s & 1u) S.push_back(s);
  return basic_of(n, static_cast<int>(S.size()) - 1, S);
}

bool is_basic(const DividingSet& ds) { return ds.is_basic(); }

std::vector<DividingSet> basic_sets(int n, int e) {
  std::vector<DividingSet> out;
  if (e < 0 || e > n) return out;
  for (std::uint32_t mask = 0; mask < (1u << (n + 1)); ++mask) {
    if (!(mask & 1u) || std::popcount(mask) != e + 1) continue;
    out.push_back(basic_of_mask(n, mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

NestingSets nesting_sets(const DividingSet& ds, const NestVector& v, int i) {
  const auto& c = ds.component(v);
  if (i < 0 || i > static_cast<int>(c.size()) - 1)
    throw IndexOutOfRange("nesting index " + std::to_string(i) + " out of range for " + to_string(v));
  NestingSets out;
  auto within = [](const std::vector<Label>& w, int lo, int hi) {
    return std::all_of(w.begin(), w.end(), [&](int s) { return lo < s && s < hi; });
  };
  for (auto& w : ds.VNB()) {
    const auto& cw = ds.component(w);
    if (within(cw, c[0], c[i])) out.nv.push_back(w);
    if (i > 0 && directly_nests(w, v) && within(cw, c[i - 1], c[i])) out.dnv.push_back(w);
  }
  return out;
}

std::string describe(const DividingSet& ds) {
  std::ostringstream os;
  bool first = true;
  for (auto& [k, b] : ds.components()) {
    if (!first) os << ",";
    first = false;
    os << to_string(k) << "{";
    for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << "}";
  }
  return os.str();
}

}  // namespace contact
