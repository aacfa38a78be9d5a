// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "contact/functor.hpp"
#include "contact/homs.hpp"
#include "contact/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace contact;
using fixtures::named;
using fixtures::NamedEntries;
using Names = std::vector<std::pair<std::string, int>>;

namespace {

// Collects failures for one criterion; the first few are printed as detail.
struct Tally {
  int cases = 0;
  std::vector<std::string> failures;
  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) failures.push_back(what);
  }
};

// Suite reports for every (n, e) up to a bound, computed once and shared by criteria.
std::map<std::string, std::vector<SuiteReport>> g_reports;

const std::vector<SuiteReport>& reports(const std::string& suite, int max_n) {
  auto& v = g_reports[suite];
  if (v.empty())
    for (int n = 1; n <= max_n; ++n)
      for (int e = 0; e <= n; ++e) v.push_back(run_suite(suite, n, e));
  return v;
}

// Folds one named check of a suite into the tally, for n up to max_n.
void fold(Tally& t, const std::string& suite, const std::string& id, int max_n, int built_to) {
  for (const auto& rep : reports(suite, built_to)) {
    if (rep.n > max_n) continue;
    for (const auto& c : rep.checks) {
      if (c.id != id) continue;
      t.cases += c.cases;
      if (!c.pass())
        t.failures.push_back(suite + "/" + id + " n=" + std::to_string(rep.n) + " e=" + std::to_string(rep.e) + ": " +
                             std::to_string(c.failures) + " failing, first " + c.counterexample.dump());
    }
  }
}

int check_count(const std::string& suite, const std::string& id, int max_n, int built_to) {
  int k = 0;
  for (const auto& rep : reports(suite, built_to))
    if (rep.n <= max_n)
      for (const auto& c : rep.checks)
        if (c.id == id) k += c.cases;
  return k;
}

bool g_all_pass = true;

void criterion(int number, const std::string& title, const std::function<std::string(Tally&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  std::string detail;
  try {
    detail = body(t);
  } catch (const std::exception& ex) {
    t.failures.push_back(std::string("exception: ") + ex.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = t.failures.empty();
  g_all_pass = g_all_pass && ok;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << " (" << title << "): " << t.cases << " checks, "
            << timing;
  if (!detail.empty()) std::cout << "; " << detail;
  std::cout << "\n";
  for (std::size_t i = 0; i < t.failures.size() && i < 5; ++i) std::cout << "    " << t.failures[i] << "\n";
  if (t.failures.size() > 5) std::cout << "    ... " << t.failures.size() - 5 << " more\n";
  std::cout.flush();
}

std::string c1_counts(Tally& t) {
  int total = 0;
  for (int e = 0; e <= 2; ++e) total += static_cast<int>(enumerate_objects(2, e).size());
  t.check(total == 5, "|ob(C_{2,*})| = " + std::to_string(total));
  t.check(enumerate_objects(2, 1).size() == 3, "|ob(C_{2,1})| != 3");
  t.check(enumerate_objects(3, 1).size() == 6, "|ob(C_{3,1})| != 6");
  for (int n = 0; n <= 8; ++n)
    for (int e = 0; e <= n; ++e) {
      const auto got = static_cast<long long>(basic_sets(n, e).size());
      t.check(got == oracle::binomial(n, e), "|B_{" + std::to_string(n) + "," + std::to_string(e) + "}| = " + std::to_string(got));
    }
  return "C_{2,*}=" + std::to_string(total) + ", C_{2,1}=3, C_{3,1}=6, |B_{n,e}|=C(n,e) for n<=8";
}

std::string c2_worked_complexes(Tally& t) {
  auto expect = [&](const std::string& ex, const Complex& c, const Names& names, const NamedEntries& d) {
    t.check(fixtures::summand_names(c) == names, ex + " summands/positions");
    t.check(named(c) == d, ex + " differential");
    t.check(verify_complex(c), ex + " is not a complex");
  };
  expect("non-basic C_{2,1}", build_F(fixtures::c21_nonbasic()), {{"P(1)", -1}, {"P(2)", 0}}, {{"P(1)", "P(2)"}});
  expect("chain C_{4,3}", build_F(fixtures::c43_chain()), {{"P(1,2,4)", -2}, {"P(1,3,4)", -1}, {"P(2,3,4)", 0}},
         {{"P(1,2,4)", "P(1,3,4)"}, {"P(1,3,4)", "P(2,3,4)"}});
  {
    // The two middle summands sit at the same position; compare as a multiset.
    auto c = build_F(fixtures::c42_square());
    auto s = fixtures::summand_names(c);
    std::multiset<std::pair<std::string, int>> got(s.begin(), s.end()),
        want{{"P(1,3)", -2}, {"P(1,4)", -1}, {"P(2,3)", -1}, {"P(2,4)", 0}};
    t.check(got == want, "square C_{4,2} summands/positions");
    t.check(named(c) == NamedEntries{{"P(1,3)", "P(1,4)"}, {"P(1,3)", "P(2,3)"}, {"P(1,4)", "P(2,4)"}, {"P(2,3)", "P(2,4)"}},
            "square C_{4,2} differential");
  }
  expect("nested C_{4,2}", build_F(fixtures::c42_nested()), {{"P(1,2)", -3}, {"P(1,3)", -2}, {"P(2,4)", -1}, {"P(3,4)", 0}},
         {{"P(1,2)", "P(1,3)"}, {"P(1,3)", "P(2,4)"}, {"P(2,4)", "P(3,4)"}});
  t.check(f_data(fixtures::c42_nested()).h == std::vector<int>{3, 2, 1, 0}, "nested C_{4,2} degree list");
  return "four reference complexes reproduced, nested C_{4,2} degrees h=(3,2,1,0)";
}

std::string c3_structural(Tally& t) {
  const int N = 5;
  fold(t, "functor", "complex", N, N);
  fold(t, "functor", "chain-map", N, N);
  fold(t, "functor", "degree-formula", N, N);
  fold(t, "functor", "region-split", N, N);
  fold(t, "triangles", "degree-sum", N, N);
  fold(t, "triangles", "gamma-boundary", N, N);

  // The worked triangles, matrix by matrix.
  auto t1 = triangle(fixtures::c42_nested(), fixtures::nested_y_move());
  t.check(named(chain_map_F(t1.beta[0])) == NamedEntries{{"P(1,2)", "P(1,2)"}, {"P(1,3)", "P(1,4)"}, {"P(2,4)", "P(2,4)"}},
          "type-Y triangle F(beta)");
  t.check(named(chain_map_F(t1.beta[1])) == NamedEntries{{"P(1,2)", "P(1,3)"}, {"P(1,4)", "P(1,4)"}, {"P(2,4)", "P(3,4)"}},
          "type-Y triangle F(beta')");
  t.check(named(chain_map_F(t1.beta[2])) == NamedEntries{{"P(1,3)", "P(1,3)"}, {"P(1,4)", "P(2,4)"}, {"P(3,4)", "P(3,4)"}},
          "type-Y triangle F(beta'')");
  auto t2 = triangle(fixtures::c52_nested(), fixtures::nested_z_move());
  t.check(named(chain_map_F(t2.beta[0])) == NamedEntries{{"P(1,3)", "P(1,3)"}, {"P(1,4)", "P(2,5)"}, {"P(3,5)", "P(3,5)"}},
          "type-Z triangle F(beta)");
  t.check(named(chain_map_F(t2.beta[1])) ==
              NamedEntries{{"P(1,2)", "P(1,2)"}, {"P(1,3)", "P(1,4)"}, {"P(2,5)", "P(2,5)"}, {"P(3,5)", "P(4,5)"}},
          "type-Z triangle F(beta')");
  t.check(named(chain_map_F(t2.beta[2])) ==
              NamedEntries{{"P(1,2)", "P(1,3)"}, {"P(1,4)", "P(1,4)"}, {"P(2,5)", "P(3,5)"}, {"P(4,5)", "P(4,5)"}},
          "type-Z triangle F(beta'')");
  auto sd = split_indices(fixtures::nested_z_move());
  t.check(sd.type == ShuffleType::Z && sd.wk && sd.wk->second == 1 &&
              fixtures::c52_nested().component(sd.wk->first) == std::vector<Label>{1, 5},
          "type-Z triangle type Z with w={1,5}, k=1");
  std::ostringstream os;
  os << check_count("triangles", "degree-sum", N, N) << " triangles and "
     << check_count("functor", "chain-map", N, N) << " bypass maps for n<=" << N << ", type Y and type Z triangle matrices exact";
  return os.str();
}

std::string c4_homotopy(Tally& t) {
  const int N = 4;
  const auto g = fixtures::c52_nested();
  bool found = false;
  for (const auto& p : disjoint_pairs(g)) {
    if (!(p.b0 == fixtures::commuting_b0() && p.b1 == fixtures::commuting_b1())) continue;
    found = true;
    auto a = compose(chain_map_F(p.b0), chain_map_F(p.b1_after_b0));
    auto b = compose(chain_map_F(p.b1), chain_map_F(p.b0_after_b1));
    t.check(named(a) == NamedEntries{{"P(1,4)", "P(3,4)"}, {"P(3,5)", "P(3,5)"}}, "commuting pair first composite");
    t.check(named(b) == NamedEntries{{"P(1,3)", "P(2,4)"}, {"P(1,4)", "P(2,5)"}, {"P(3,5)", "P(3,5)"}}, "commuting pair second composite");
    ChainMap h{a.src, a.dst, a.k - 1, {}};
    for (int i = 0; i < h.src.size(); ++i)
      for (int j = 0; j < h.dst.size(); ++j)
        if (basic_name(h.src.summands[i].gamma) == "P(1,4)" && basic_name(h.dst.summands[j].gamma) == "P(2,4)")
          h.f.insert({i, j});
    t.check(h.f.size() == 1 && boundary(h).f == add(a, b).f, "commuting pair: the stated F(h) does not solve the equation");
    t.check(find_homotopy(a, b).has_value(), "commuting pair: no homotopy found");
  }
  t.check(found, "commuting pair not produced by disjoint_pairs");
  fold(t, "triangles", "composite-nullhomotopic", N, 5);
  fold(t, "triangles", "distinguished", N, 5);
  fold(t, "functor", "disjoint-commute", N, 5);
  std::ostringstream os;
  os << "commuting-pair homotopy P(1,4)->P(2,4) verified; " << check_count("triangles", "distinguished", N, 5)
     << " triangles distinguished, " << check_count("functor", "disjoint-commute", N, 5)
     << " disjoint pairs commute up to homotopy, n<=" << N;
  return os.str();
}

std::string c5_homs(Tally& t) {
  const int N = 4;
  fold(t, "faithful", "end-one-dimensional", N, N);
  fold(t, "faithful", "bypass-hom-vanishes", N, N);
  fold(t, "faithful", "hom-table", N, N);
  fold(t, "faithful", "morphism-image", N, N);
  return std::to_string(check_count("faithful", "hom-table", N, N)) + " ordered pairs match dim Hom_C, n<=" +
         std::to_string(N);
}

std::string c6_serre(Tally& t) {
  const int N = 4;
  fold(t, "serre", "resolution-shape", N, N);
  fold(t, "serre", "resolution", N, N);
  fold(t, "serre", "calabi-yau", N, N);
  fold(t, "serre", "transform", 3, N);
  fold(t, "serre", "transform-basic", 3, N);
  int one_based = 0, other = 0;
  for (int n = 1; n <= N; ++n)
    for (int e = 0; e <= n; ++e)
      for (const auto& g : basic_sets(n, e)) (g.based_mask() >> 1 & 1u ? one_based : other)++;
  t.check(one_based > 0 && other > 0, "both resolution branches exercised");
  std::map<std::string, int> shifts;
  for (const auto& rep : reports("serre", N))
    if (rep.n <= 3)
      for (const auto& c : rep.checks)
        if (c.id == "transform")
          for (auto& [s, k] : c.info["shifts"].items()) shifts[s] += k.get<int>();
  std::ostringstream os;
  os << "resolutions in both branches (" << one_based << "+" << other << "), S^{n+1} = [e(n-e)] for n<=" << N
     << ", S_D F(G) = F(S G) in the ungraded category for n<=3 (grading shifts";
  for (auto [s, k] : shifts) os << " " << s << ":" << k;
  os << ")";
  return os.str();
}

std::string c7_oracles(Tally& t) {
  int pairs = 0;
  for (int n = 1; n <= 6; ++n)
    for (int e = 0; e <= n; ++e) {
      const auto bs = basic_sets(n, e);
      for (const auto& a : bs)
        for (const auto& b : bs) {
          ++pairs;
          const bool want = a == b || oracle::interval_tight(a.based_mask(), b.based_mask());
          t.check(hom_nonzero(a, b) == want && tight_basic(a, b) == want,
                  "hom " + describe(a) + " -> " + describe(b));
        }
    }
  for (int n = 0; n <= 6; ++n) {
    auto by_e = oracle::matchings_by_e(n);
    for (int e = 0; e <= n; ++e) {
      std::set<Matching> lib, ref(by_e[e].begin(), by_e[e].end());
      for (const auto& g : enumerate_objects(n, e)) lib.insert(g.matching());
      t.check(lib == ref, "enumeration n=" + std::to_string(n) + " e=" + std::to_string(e));
    }
  }
  return std::to_string(pairs) + " basic pairs and all C_{n,e} for n<=6 agree with the oracles";
}

}  // namespace

int main() {
  criterion(1, "counts", c1_counts);
  criterion(2, "worked complexes", c2_worked_complexes);
  criterion(3, "structural identities", c3_structural);
  criterion(4, "homotopy category", c4_homotopy);
  criterion(5, "hom computations", c5_homs);
  criterion(6, "Serre and Calabi-Yau", c6_serre);
  criterion(7, "oracle cross-checks", c7_oracles);
  return g_all_pass ? 0 : 1;
}
