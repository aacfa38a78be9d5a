#include "contact/algebra.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "contact/homs.hpp"

namespace contact {

int TightTable::index_of(std::uint32_t mask) const {
  auto it = std::lower_bound(masks.begin(), masks.end(), mask);
  if (it == masks.end() || *it != mask) return -1;
  return static_cast<int>(it - masks.begin());
}

const TightTable& tight_table(int n, int e) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, TightTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace({n, e});
  TightTable& t = it->second;
  if (fresh) {
    t.n = n;
    t.e = e;
    for (std::uint32_t m = 1; m < (1u << (n + 1)); m += 2)
      if (std::popcount(m) == e + 1) t.masks.push_back(m);
    const std::size_t k = t.masks.size();
    t.tight.assign(k, std::vector<char>(k, 0));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) t.tight[a][b] = tight_masks(t.masks[a], t.masks[b]);
  }
  return t;
}

AlgebraElement AlgebraElement::idempotent(const DividingSet& g) {
  if (!g.is_basic()) throw NotBasic("idempotents are indexed by basic sets");
  return AlgebraElement{{BasisElem{g, g}}};
}

AlgebraElement AlgebraElement::generator(const DividingSet& src, const DividingSet& dst) {
  if (!tight_basic(src, dst)) throw InvariantViolation("(src|dst) is not a basis element: the pair is not tight");
  return AlgebraElement{{BasisElem{src, dst}}};
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  for (const auto& t : b.terms)
    if (!out.terms.erase(t)) out.terms.insert(t);
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  std::map<BasisElem, int> acc;
  for (const auto& x : a.terms)
    for (const auto& y : b.terms) {
      if (!(x.dst == y.src)) continue;
      if (x.src.n() != y.dst.n() || x.src.e() != y.dst.e()) continue;
      if (!tight_basic(x.src, y.dst)) continue;
      acc[BasisElem{x.src, y.dst}] ^= 1;
    }
  AlgebraElement out;
  for (auto& [k, v] : acc)
    if (v) out.terms.insert(k);
  return out;
}

int algebra_dimension(int n, int e) {
  const TightTable& t = tight_table(n, e);
  int d = 0;
  for (const auto& row : t.tight) d += static_cast<int>(std::count(row.begin(), row.end(), 1));
  return d;
}

std::vector<std::pair<int, DividingSet>> arrows_from(const DividingSet& g) {
  if (!g.is_basic()) throw NotBasic("arrows_from needs a basic set");
  std::vector<std::pair<int, DividingSet>> out;
  const std::uint32_t m = g.based_mask();
  for (int s = 1; s < g.n(); ++s)
    if ((m >> s & 1u) && !(m >> (s + 1) & 1u)) out.emplace_back(s, basic_of_mask(g.n(), (m & ~(1u << s)) | (1u << (s + 1))));
  return out;
}

std::string basic_name(const DividingSet& g) {
  std::ostringstream os;
  os << "P(";
  bool first = true;
  for (Label s : g.component(STAR)) {
    if (s == 0) continue;
    os << (first ? "" : ",") << s;
    first = false;
  }
  os << ")";
  return os.str();
}

PresentationReport verify_presentation(int n, int e) {
  PresentationReport rep;
  auto basics = basic_sets(n, e);
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };
  auto arrow = [](const DividingSet& a, const DividingSet& b) { return AlgebraElement{{BasisElem{a, b}}}; };

  std::map<DividingSet, std::vector<std::pair<int, DividingSet>>> Q;
  for (const auto& g : basics) {
    Q[g] = arrows_from(g);
    rep.arrows += static_cast<int>(Q[g].size());
  }

  for (const auto& a : basics)
    for (const auto& b : basics) {
      const bool t = tight_basic(a, b);
      rep.basis_size += t;
      // (Γ)(Γ') = δ and the identity laws.
      AlgebraElement ea = AlgebraElement::idempotent(a), eb = AlgebraElement::idempotent(b);
      if (multiply(ea, eb) != (a == b ? ea : AlgebraElement{})) fail("idempotent law " + basic_name(a) + "," + basic_name(b));
      if (t) {
        AlgebraElement x{{BasisElem{a, b}}};
        if (multiply(ea, x) != x || multiply(x, eb) != x) fail("unit law on " + basic_name(a) + "|" + basic_name(b));
      }
      if (a == b) continue;
      // All quiver paths a -> b multiply to the same element; it is (a|b) iff tight.
      std::vector<AlgebraElement> products;
      std::function<void(const DividingSet&, AlgebraElement)> walk = [&](const DividingSet& x, AlgebraElement acc) {
        if (x == b) {
          products.push_back(acc);
          return;
        }
        for (const auto& [s, y] : Q[x]) walk(y, multiply(acc, arrow(x, y)));
      };
      walk(a, ea);
      AlgebraElement expect = t ? arrow(a, b) : AlgebraElement{};
      if (t && products.empty()) fail("basis element " + basic_name(a) + "|" + basic_name(b) + " has no arrow factorization");
      for (const auto& p : products)
        if (p != expect) fail("path product mismatch " + basic_name(a) + " -> " + basic_name(b));
    }

  // Zero relation s, s-1 and commutation for |s-t| > 1.
  for (const auto& g : basics)
    for (const auto& [s, g1] : Q[g])
      for (const auto& [t, g2] : Q[g1]) {
        AlgebraElement p = multiply(arrow(g, g1), arrow(g1, g2));
        if (t == s - 1 && !p.is_zero()) fail("relation (s, s-1) nonzero at " + basic_name(g));
        if (std::abs(s - t) > 1) {
          bool found = false;
          for (const auto& [t2, g3] : Q[g])
            if (t2 == t)
              for (const auto& [s2, g4] : Q[g3])
                if (s2 == s && g4 == g2) {
                  found = true;
                  if (multiply(arrow(g, g3), arrow(g3, g2)) != p) fail("commutation fails at " + basic_name(g));
                }
          if (!found) fail("missing commuting square at " + basic_name(g));
        }
      }
  return rep;
}

std::string quiver_dot(int n, int e) {
  std::ostringstream os;
  os << "digraph Q_" << n << "_" << e << " {\n";
  auto basics = basic_sets(n, e);
  for (const auto& g : basics) os << "  \"" << basic_name(g) << "\";\n";
  for (const auto& g : basics)
    for (const auto& [s, h] : arrows_from(g))
      os << "  \"" << basic_name(g) << "\" -> \"" << basic_name(h) << "\" [label=\"" << s << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace contact
