#include "contact/homs.hpp"

#include <bit>
#include <deque>
#include <set>

#include "contact/bypass.hpp"

namespace contact {

int rounded_components(const DividingSet& a, const DividingSet& b) {
  if (a.n() != b.n() || a.e() != b.e()) throw ComponentMismatch("dividing sets live in different C_{n,e}");
  const int N = 2 * a.n() + 2;
  const auto& m = a.matching();
  const auto& mp = b.matching();
  auto wrap = [N](int q) { return ((q % N) + N) % N; };
  auto f = [&](int q) { return m[wrap(mp[wrap(q + kEdgeRoundingShift)] - kEdgeRoundingShift)]; };
  std::vector<char> seen(N, 0);
  int cycles = 0;
  for (int q = 0; q < N; ++q) {
    if (seen[q]) continue;
    ++cycles;
    for (int x = q; !seen[x]; x = f(x)) seen[x] = 1;
  }
  return cycles / 2;
}

bool hom_nonzero(const DividingSet& a, const DividingSet& b) { return rounded_components(a, b) == 1; }

bool tight_masks(std::uint32_t a, std::uint32_t b) {
  while (a != b) {
    std::uint32_t ab = a & ~b, ba = b & ~a;
    if (!ab || !ba) return false;
    int s = std::countr_zero(ab), t = std::countr_zero(ba);
    if (s >= t) return false;
    // No based label of a in (s, t].
    std::uint32_t window = ((t + 1 < 32 ? (1u << (t + 1)) : 0u) - 1u) & ~((1u << (s + 1)) - 1u);
    if (a & window) return false;
    a = (a & ~(1u << s)) | (1u << t);
  }
  return true;
}

bool tight_basic(const DividingSet& a, const DividingSet& b) {
  if (a.n() != b.n() || a.e() != b.e()) throw ComponentMismatch("dividing sets live in different C_{n,e}");
  if (!a.is_basic() || !b.is_basic()) throw NotBasic("tight_basic needs basic dividing sets");
  return tight_masks(a.based_mask(), b.based_mask());
}

namespace {
// BFS over bypass chains from `from` to `to`, each node satisfying `ok`.
template <class Ok>
bool chain_exists(const DividingSet& from, const DividingSet& to, Ok ok) {
  if (!ok(from)) return false;
  std::set<DividingSet> seen{from};
  std::deque<DividingSet> q{from};
  while (!q.empty()) {
    DividingSet x = q.front();
    q.pop_front();
    if (x == to) return true;
    for (const auto& mv : enumerate_bypasses(x)) {
      DividingSet y = attach(x, mv);
      if (seen.count(y) || !ok(y)) continue;
      seen.insert(y);
      q.push_back(y);
    }
  }
  return false;
}
}  // namespace

bool composition_nonzero(const DividingSet& a, const DividingSet& b, const DividingSet& c) {
  if (!hom_nonzero(a, b) || !hom_nonzero(b, c) || !hom_nonzero(a, c)) return false;
  if (b == a || b == c) return true;
  return chain_exists(a, b, [&](const DividingSet& x) { return hom_nonzero(x, c); });
}

bool composition_nonzero_right(const DividingSet& a, const DividingSet& b, const DividingSet& c) {
  if (!hom_nonzero(a, b) || !hom_nonzero(b, c) || !hom_nonzero(a, c)) return false;
  if (b == a || b == c) return true;
  return chain_exists(b, c, [&](const DividingSet& x) { return hom_nonzero(a, x); });
}

}  // namespace contact
