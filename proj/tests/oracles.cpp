#include "oracles.hpp"

namespace oracle {

namespace {

bool crosses(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

void extend(std::vector<int>& m, std::vector<std::vector<int>>& out) {
  int p = 0;
  while (p < static_cast<int>(m.size()) && m[p] >= 0) ++p;
  if (p == static_cast<int>(m.size())) {
    for (int a = 0; a < static_cast<int>(m.size()); ++a)
      for (int c = 0; c < static_cast<int>(m.size()); ++c)
        if (a < m[a] && c < m[c] && crosses(a, m[a], c, m[c])) return;
    out.push_back(m);
    return;
  }
  for (int q = p + 1; q < static_cast<int>(m.size()); ++q) {
    if (m[q] >= 0) continue;
    m[p] = q;
    m[q] = p;
    extend(m, out);
    m[p] = m[q] = -1;
  }
}

}  // namespace

std::vector<std::vector<int>> noncrossing_involutions(int points) {
  std::vector<std::vector<int>> out;
  std::vector<int> m(points, -1);
  extend(m, out);
  return out;
}

int positive_regions(const std::vector<int>& m) {
  const int size = static_cast<int>(m.size());
  std::vector<char> seen(size, 0);
  int count = 0;
  for (int start = 0; start < size; start += 2) {
    if (seen[start]) continue;
    ++count;
    // Walk the boundary of the region: along arc p to point p+1, across its chord.
    for (int p = start; !seen[p]; p = m[(p + 1) % size]) seen[p] = 1;
  }
  return count;
}

std::map<int, std::vector<std::vector<int>>> matchings_by_e(int n) {
  std::map<int, std::vector<std::vector<int>>> out;
  for (auto& m : noncrossing_involutions(2 * n + 2)) out[n + 1 - positive_regions(m)].push_back(m);
  return out;
}

long long binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::vector<long long> row(a + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= a; ++i)
    for (int j = i; j > 0; --j) row[j] += row[j - 1];
  return row[b];
}

bool interval_tight(std::uint32_t a, std::uint32_t b) {
  std::vector<int> s, t;
  for (int i = 0; i < 32; ++i) {
    const bool in_a = a >> i & 1u, in_b = b >> i & 1u;
    if (in_a && !in_b) s.push_back(i);
    if (in_b && !in_a) t.push_back(i);
  }
  if (s.size() != t.size()) return false;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == 0 || s[k] >= t[k]) return false;
    if (k + 1 < s.size() && t[k] >= s[k + 1]) return false;
    for (int x = s[k] + 1; x <= t[k]; ++x)
      if (a >> x & 1u) return false;
  }
  return true;
}

}  // namespace oracle
