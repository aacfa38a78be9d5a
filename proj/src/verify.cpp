#include "contact/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>

#include "contact/algebra.hpp"
#include "contact/bypass.hpp"
#include "contact/functor.hpp"
#include "contact/homs.hpp"
#include "contact/io.hpp"
#include "contact/kom.hpp"

namespace contact {

using nlohmann::json;

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); });
}

json SuiteReport::to_json(bool timing) const {
  json cs = json::array();
  for (const auto& c : checks) {
    json j{{"id", c.id}, {"pass", c.pass()}, {"cases", c.cases}, {"failures", c.failures}};
    if (!c.counterexample.is_null()) j["counterexample"] = c.counterexample;
    if (!c.info.is_null()) j["info"] = c.info;
    cs.push_back(j);
  }
  json out{{"suite", suite}, {"n", n}, {"e", e}, {"pass", ok()}, {"checks", cs}};
  if (timing) out["seconds"] = seconds;
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"divset", "homs", "functor", "triangles", "serre", "faithful"};
  return names;
}

bool suite_is_homotopical(const std::string& suite) {
  return suite == "triangles" || suite == "serre" || suite == "faithful";
}

namespace {

// Records the outcome of each case; keeps the first counterexample.
struct Check {
  CheckResult r;
  explicit Check(std::string id) { r.id = std::move(id); }
  void operator()(bool ok, const std::function<json()>& payload) {
    ++r.cases;
    if (ok) return;
    if (r.failures++ == 0) r.counterexample = payload();
  }
};

json move_payload(const BypassMove& mv) { return {{"gamma", to_json(mv.source)}, {"bypass", to_json(mv)}}; }

// Any exception inside a case counts as a failure of that case.
template <class F>
bool guarded(F&& f, std::string* why = nullptr) {
  try {
    return f();
  } catch (const std::exception& ex) {
    if (why) *why = ex.what();
    return false;
  }
}

long long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::vector<CheckResult> divset_suite(int n, int e) {
  const auto objs = enumerate_objects(n, e);
  Check count("count"), valid("validate"), round("round-trip"), distinct("distinct"), basics("basic-count");

  // Crossingless matchings of 2n+2 points with n-e+1 positive components: a Narayana number.
  const long long want = binom(n + 1, e + 1) * binom(n + 1, e) / (n + 1);
  count(static_cast<long long>(objs.size()) == want,
        [&] { return json{{"expected", want}, {"got", objs.size()}}; });
  count.r.info = {{"objects", objs.size()}};

  std::set<Matching> seen;
  for (const auto& g : objs) {
    auto rep = validate(g);
    valid(rep.ok, [&] { return json{{"gamma", to_json(g)}, {"violations", rep.violations}}; });
    bool rt = guarded([&] {
      return DividingSet::from_matching(g.matching(), n, e) == g &&
             DividingSet::from_components(n, e, g.components()) == g && to_matching(g) == g.matching();
    });
    round(rt, [&] { return json{{"gamma", to_json(g)}}; });
    distinct(seen.insert(g.matching()).second, [&] { return json{{"gamma", to_json(g)}}; });
  }
  const auto bs = basic_sets(n, e);
  const auto nb = std::count_if(objs.begin(), objs.end(), [](const DividingSet& g) { return g.is_basic(); });
  basics(static_cast<long long>(bs.size()) == binom(n, e) && nb == static_cast<long>(bs.size()),
         [&] { return json{{"expected", binom(n, e)}, {"basic_sets", bs.size()}, {"basic_objects", nb}}; });
  return {count.r, valid.r, round.r, distinct.r, basics.r};
}

std::vector<CheckResult> homs_suite(int n, int e) {
  const auto objs = enumerate_objects(n, e);
  Check ident("identity"), tight("basic-tightness"), byp("bypass-nonzero"), closes("triangle-closes"),
      rot("serre-order"), pres("presentation");
  for (const auto& g : objs) {
    ident(hom_nonzero(g, g), [&] { return json{{"gamma", to_json(g)}}; });
    DividingSet r = g;
    for (int k = 0; k <= n; ++k) r = serre_rotate(r);
    rot(r == g, [&] { return json{{"gamma", to_json(g)}}; });
    for (const auto& mv : enumerate_bypasses(g)) {
      byp(hom_nonzero(g, attach(g, mv)), [&] { return move_payload(mv); });
      bool ok = guarded([&] {
        auto t = triangle(g, mv);
        for (int k = 0; k < 3; ++k)
          if (!(attach(t.gamma[k], t.beta[k]) == t.gamma[(k + 1) % 3])) return false;
        return t.gamma[0] == g;
      });
      closes(ok, [&] { return move_payload(mv); });
    }
  }
  const auto bs = basic_sets(n, e);
  for (const auto& a : bs)
    for (const auto& b : bs) {
      const bool h = hom_nonzero(a, b), t = tight_basic(a, b), m = tight_masks(a.based_mask(), b.based_mask());
      tight(h == t && t == m, [&] {
        return json{{"a", to_json(a)}, {"b", to_json(b)}, {"edge_rounding", h}, {"tight_basic", t}, {"tight_masks", m}};
      });
    }
  auto rep = verify_presentation(n, e);
  pres(rep.ok, [&] { return json{{"failures", rep.failures}}; });
  pres.r.info = {{"basis", rep.basis_size}, {"arrows", rep.arrows}};
  return {ident.r, tight.r, byp.r, closes.r, rot.r, pres.r};
}

std::vector<CheckResult> functor_suite(int n, int e) {
  const auto objs = enumerate_objects(n, e);
  Check cx("complex"), split("region-split"), chain("chain-map"), deg("degree-formula"), dj("disjoint-commute");
  for (const auto& g : objs) {
    const Complex& c = build_F(g);
    std::string why = complex_defect(c);
    cx(why.empty(), [&] { return json{{"gamma", to_json(g)}, {"defect", why}}; });

    bool ok = guarded([&] {
      const auto m = c.masks();
      std::vector<Entries> parts;
      Entries sum;
      for (int r : negative_regions(g)) parts.push_back(negative_region_differential(g, r));
      for (const auto& p : parts)
        for (const auto& x : p)
          if (!sum.insert(x).second) return false;
      if (sum != c.d) return false;
      for (const auto& p : parts) {
        if (!compose_entries(m, p, p, m).empty()) return false;
        for (const auto& q : parts)
          if (compose_entries(m, p, q, m) != compose_entries(m, q, p, m)) return false;
      }
      return true;
    });
    split(ok, [&] { return json{{"gamma", to_json(g)}}; });

    for (const auto& mv : enumerate_bypasses(g)) {
      std::string err;
      chain(guarded([&] { return is_chain_map(chain_map_F(mv)); }, &err),
            [&] { return json{{"case", move_payload(mv)}, {"error", err}}; });
      deg(guarded([&] { return deg_F(mv) == deg_formula(mv); }, &err),
          [&] { return json{{"case", move_payload(mv)}, {"error", err}}; });
    }
    for (const auto& p : disjoint_pairs(g)) {
      bool ok2 = guarded([&] {
        auto a = compose(chain_map_F(p.b0), chain_map_F(p.b1_after_b0));
        auto b = compose(chain_map_F(p.b1), chain_map_F(p.b0_after_b1));
        return a.k == b.k && find_homotopy(a, b).has_value();
      });
      dj(ok2, [&] {
        return json{{"gamma", to_json(g)}, {"b0", to_json(p.b0)}, {"b1", to_json(p.b1)}, {"target", to_json(p.target)}};
      });
    }
  }
  return {cx.r, split.r, chain.r, deg.r, dj.r};
}

// ε: cone(F(β)) -> F(Γ'')[k+k'], F(γ) on the shifted source and F(β') on the target part.
ChainMap triangle_epsilon(const ChainMap& f1, const ChainMap& f2, const ChainMap& g) {
  Complex k = cone(as_degree_zero(f1));
  Complex z = shift(g.dst, f1.k + f2.k);
  ChainMap eps{k, z, 0, g.f};
  const int off = f1.src.size();
  for (auto [i, j] : f2.f) eps.f.insert({off + i, j});
  return eps;
}

std::vector<CheckResult> triangles_suite(int n, int e) {
  const auto objs = enumerate_objects(n, e);
  Check sum("degree-sum"), bnd("gamma-boundary"), nul("composite-nullhomotopic"), dist("distinguished");
  int triangles = 0;
  for (const auto& g : objs)
    for (const auto& mv : enumerate_bypasses(g)) {
      ++triangles;
      const Triangle t = triangle(g, mv);
      std::string err;
      std::optional<ChainMap> f1, f2, f3, gm;
      bool built = guarded([&] {
        f1 = chain_map_F(t.beta[0]);
        f2 = chain_map_F(t.beta[1]);
        f3 = chain_map_F(t.beta[2]);
        gm = gamma_chain_map(t);
        return true;
      }, &err);
      auto payload = [&] { return json{{"case", move_payload(mv)}, {"error", err}}; };
      if (!built) {
        sum(false, payload);
        continue;
      }
      sum(f1->k + f2->k + f3->k == 1, payload);
      const ChainMap comp = compose(*f1, *f2);
      const ChainMap b = boundary(*gm);
      bnd(comp.k == b.k && comp.f == b.f, payload);
      nul(guarded([&] { return is_nullhomotopic(comp); }, &err), payload);
      dist(guarded([&] {
             ChainMap eps = triangle_epsilon(*f1, *f2, *gm);
             return is_chain_map(eps) && is_homotopy_equivalence(eps);
           }, &err),
           payload);
    }
  sum.r.info = {{"objects", objs.size()}, {"triangles", triangles}};
  return {sum.r, bnd.r, nul.r, dist.r};
}

std::vector<CheckResult> serre_suite(int n, int e) {
  const auto objs = enumerate_objects(n, e);
  Check res("resolution"), shape("resolution-shape"), tr("transform"), basic_tr("transform-basic"), cy("calabi-yau");
  std::map<int, int> shifts;
  for (const auto& g : basic_sets(n, e)) {
    std::string err;
    std::optional<Complex> r;
    bool built = guarded([&] { r = serre_resolution(g); return true; }, &err);
    auto payload = [&] { return json{{"gamma", to_json(g)}, {"error", err}}; };
    if (!built) {
      res(false, payload);
      continue;
    }
    const bool one_based = n > 0 && ((g.based_mask() >> 1) & 1u);
    shape(one_based ? (r->size() == 1 && r->summands[0].gamma == serre_rotate(g)) : r->size() == e + 1, payload);
    res(guarded([&] { return equivalent(*r, build_F(serre_rotate(g))); }, &err), payload);

    bool ok = guarded([&] {
      Complex c = projective(g);
      for (int k = 0; k <= n; ++k) c = serre_transform(c);
      return equivalent(c, shift(projective(g), e * (n - e)));
    }, &err);
    cy(ok, payload);
  }
  for (const auto& g : objs) {
    std::string err;
    std::optional<int> s;
    bool ok = guarded([&] {
      s = equivalent_up_to_shift(serre_transform(build_F(g)), build_F(serre_rotate(g)));
      return s.has_value();
    }, &err);
    tr(ok, [&] { return json{{"gamma", to_json(g)}, {"error", err}}; });
    if (s) ++shifts[*s];
    if (g.is_basic()) basic_tr(s && *s == 0, [&] { return json{{"gamma", to_json(g)}, {"shift", s ? json(*s) : json()}}; });
  }
  json hist = json::object();
  for (auto [s, k] : shifts) hist[std::to_string(s)] = k;
  tr.r.info = {{"shifts", hist}};
  return {shape.r, res.r, tr.r, basic_tr.r, cy.r};
}

std::vector<CheckResult> faithful_suite(int n, int e) {
  const auto objs = enumerate_objects(n, e);
  Check end("end-one-dimensional"), byp("bypass-hom-vanishes"), table("hom-table"), image("morphism-image");
  for (const auto& g : objs) {
    const Complex& c = build_F(g);
    end(hom_dim(c, c, 0) == 1 && hom_total(c, c) == 1, [&] { return json{{"gamma", to_json(g)}}; });
    for (const auto& mv : enumerate_bypasses(g))
      byp(hom_total(build_F(attach(g, mv)), c) == 0, [&] { return move_payload(mv); });
    for (const auto& g2 : objs) {
      const int want = hom_nonzero(g, g2) ? 1 : 0;
      const int got = hom_total(c, build_F(g2));
      table(got == want, [&] { return json{{"a", to_json(g)}, {"b", to_json(g2)}, {"expected", want}, {"got", got}}; });
      if (want) {
        std::string err;
        bool ok = guarded([&] {
          auto f = F_of_morphism(g, g2);
          return f && is_chain_map(*f) && !is_nullhomotopic(*f);
        }, &err);
        image(ok, [&] { return json{{"a", to_json(g)}, {"b", to_json(g2)}, {"error", err}}; });
      }
    }
  }
  return {end.r, byp.r, table.r, image.r};
}

}  // namespace

SuiteReport run_suite(const std::string& suite, int n, int e) {
  if (n < 0 || e < 0 || e > n) throw std::invalid_argument("need 0 <= e <= n");
  SuiteReport rep;
  rep.suite = suite;
  rep.n = n;
  rep.e = e;
  const auto t0 = std::chrono::steady_clock::now();
  if (suite == "divset") rep.checks = divset_suite(n, e);
  else if (suite == "homs") rep.checks = homs_suite(n, e);
  else if (suite == "functor") rep.checks = functor_suite(n, e);
  else if (suite == "triangles") rep.checks = triangles_suite(n, e);
  else if (suite == "serre") rep.checks = serre_suite(n, e);
  else if (suite == "faithful") rep.checks = faithful_suite(n, e);
  else throw std::invalid_argument("unknown suite: " + suite);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace contact
