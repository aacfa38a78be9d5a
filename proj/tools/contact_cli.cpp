// contact_cli: enumeration, construction, verification suites and DOT export for C_{n,e}.
//
// Exit codes: 0 success, 1 a verification check failed, 2 bad arguments or unparsable
// input, 3 input that parses but violates an invariant.

#include <algorithm>
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "contact/algebra.hpp"
#include "contact/bypass.hpp"
#include "contact/functor.hpp"
#include "contact/homs.hpp"
#include "contact/io.hpp"
#include "contact/kom.hpp"
#include "contact/verify.hpp"

using nlohmann::json;
using namespace contact;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;
constexpr int kEnumerateMaxN = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "-" reads stdin, "@path" reads a file, anything else is inline JSON.
json read_json_arg(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot open " + arg.substr(1));
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    text = arg;
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
}

Complex read_complex(const std::string& arg) {
  Complex c = complex_from_json(read_json_arg(arg));
  for (const auto& s : c.summands)
    if (s.gamma.n() != c.n || s.gamma.e() != c.e || !s.gamma.is_basic())
      throw InvariantViolation("complex summands must be basic sets of C_{" + std::to_string(c.n) + "," +
                               std::to_string(c.e) + "}");
  if (auto why = complex_defect(c); !why.empty()) throw InvariantViolation("not a complex: " + why);
  return c;
}

// Default bound, raised by --max-n with a warning once it is actually exceeded.
void check_bound(int n, int default_max, std::optional<int> max_n, const std::string& what) {
  const int bound = max_n ? *max_n : default_max;
  if (n > bound)
    throw UsageError(what + ": n=" + std::to_string(n) + " exceeds the bound " + std::to_string(bound) +
                     " (raise it with --max-n)");
  if (n > default_max)
    std::cerr << "warning: " << what << " at n=" << n << " is beyond the default bound " << default_max
              << "; this may be slow\n";
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contact category of a disk: dividing sets, the algebra R_{n,e} and the functor F"};
  app.require_subcommand(1);

  std::optional<int> max_n;
  int jobs = 1;
  unsigned seed = 0;
  app.add_option("--max-n", max_n, "Raise the size bound of enumerate and verify")->check(CLI::NonNegativeNumber);
  app.add_option("--jobs", jobs, "Accepted for compatibility; all work is sequential");
  app.add_option("--seed", seed, "Accepted for compatibility; all computation is exhaustive");

  int n = 0, e = 0;
  std::optional<int> e_opt;
  std::string format = "json", suite = "all", what, arg1, arg2;
  bool timing = false;

  auto* enumerate = app.add_subcommand("enumerate", "List the dividing sets of C_{n,e}");
  enumerate->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--e", e)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "count"}));

  auto* hom = app.add_subcommand("hom", "dim Hom(Γ, Γ') by edge rounding");
  hom->add_option("gamma", arg1, "Dividing set JSON, @file or -")->required();
  hom->add_option("gamma2", arg2, "Dividing set JSON, @file or -")->required();

  auto* complex = app.add_subcommand("complex", "The complex F(Γ)");
  complex->add_option("gamma", arg1)->required();

  auto* chainmap = app.add_subcommand("chainmap", "The chain map F(β) of a bypass on Γ");
  chainmap->add_option("gamma", arg1)->required();
  chainmap->add_option("bypass", arg2, "{\"uv\",\"ov\",\"x\",\"y\",\"z\"}")->required();

  auto* triangle_cmd = app.add_subcommand("triangle", "The bypass triangle through a bypass on Γ");
  triangle_cmd->add_option("gamma", arg1)->required();
  triangle_cmd->add_option("bypass", arg2)->required();

  auto* homdim = app.add_subcommand("homdim", "Graded dimensions of Hom(C, C') in the homotopy category");
  homdim->add_option("complex", arg1)->required();
  homdim->add_option("complex2", arg2)->required();

  auto* verify = app.add_subcommand("verify", "Run invariant suites exhaustively over C_{n,e}");
  verify->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--e", e_opt, "Default: every e in 0..n")->check(CLI::NonNegativeNumber);
  std::vector<std::string> suites{"all"};
  for (const auto& s : suite_names()) suites.push_back(s);
  verify->add_option("--suite", suite)->check(CLI::IsMember(suites));
  verify->add_flag("--timing", timing, "Include wall-clock durations (output is then not byte-stable)");

  auto* dot = app.add_subcommand("export-dot", "DOT export: quiver, bypass-graph or triangle");
  dot->add_option("what", what)->required()->check(CLI::IsMember({"quiver", "bypass-graph", "triangle"}));
  dot->add_option("--n", n)->check(CLI::NonNegativeNumber);
  dot->add_option("--e", e)->check(CLI::NonNegativeNumber);
  dot->add_option("--gamma", arg1, "Source set for triangle export");
  dot->add_option("--bypass", arg2, "Bypass for triangle export");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    return app.exit(ex) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*enumerate) {
      if (e > n) throw UsageError("need e <= n");
      check_bound(n, kEnumerateMaxN, max_n, "enumerate");
      auto objs = enumerate_objects(n, e);
      if (format == "count") {
        std::cout << objs.size() << "\n";
      } else {
        json out = json::array();
        for (const auto& g : objs) out.push_back(to_json(g));
        print(out);
      }
    } else if (*hom) {
      auto a = dividing_set_from_json(read_json_arg(arg1));
      auto b = dividing_set_from_json(read_json_arg(arg2));
      if (a.n() != b.n() || a.e() != b.e()) throw InvariantViolation("sets live in different C_{n,e}");
      print({{"dim", hom_nonzero(a, b) ? 1 : 0}, {"rounded_components", rounded_components(a, b)}});
    } else if (*complex) {
      print(to_json(build_F(dividing_set_from_json(read_json_arg(arg1)))));
    } else if (*chainmap) {
      auto g = dividing_set_from_json(read_json_arg(arg1));
      auto mv = bypass_from_json(g, read_json_arg(arg2));
      json out = to_json(chain_map_F(mv));
      out["target"] = to_json(attach(g, mv));
      print(out);
    } else if (*triangle_cmd) {
      auto g = dividing_set_from_json(read_json_arg(arg1));
      auto t = triangle(g, bypass_from_json(g, read_json_arg(arg2)));
      json gs = json::array(), bs = json::array(), ks = json::array();
      for (int k = 0; k < 3; ++k) {
        gs.push_back(to_json(t.gamma[k]));
        bs.push_back(to_json(t.beta[k]));
        ks.push_back(deg_F(t.beta[k]));
      }
      print({{"gamma", gs}, {"beta", bs}, {"degrees", ks}});
    } else if (*homdim) {
      Complex c = read_complex(arg1), d = read_complex(arg2);
      if (c.n != d.n || c.e != d.e) throw InvariantViolation("complexes over different algebras");
      json by = json::object();
      int total = 0;
      if (c.size() > 0 && d.size() > 0) {
        auto [clo, chi] = std::minmax_element(c.summands.begin(), c.summands.end(),
                                              [](const ProjSummand& x, const ProjSummand& y) { return x.h < y.h; });
        auto [dlo, dhi] = std::minmax_element(d.summands.begin(), d.summands.end(),
                                              [](const ProjSummand& x, const ProjSummand& y) { return x.h < y.h; });
        for (int k = dlo->h - chi->h; k <= dhi->h - clo->h; ++k)
          if (int dim = hom_dim(c, d, k)) {
            by[std::to_string(k)] = dim;
            total += dim;
          }
      }
      print({{"total", total}, {"by_degree", by}});
    } else if (*verify) {
      std::vector<std::string> run;
      if (suite == "all") run = suite_names();
      else run = {suite};
      if (e_opt && *e_opt > n) throw UsageError("need e <= n");
      for (const auto& s : run)
        check_bound(n, suite_is_homotopical(s) ? kHomotopicalMaxN : kCombinatorialMaxN, max_n, "suite " + s);
      json reports = json::array();
      bool ok = true;
      for (const auto& s : run)
        for (int ee = e_opt ? *e_opt : 0; ee <= (e_opt ? *e_opt : n); ++ee) {
          auto rep = run_suite(s, n, ee);
          ok = ok && rep.ok();
          reports.push_back(rep.to_json(timing));
        }
      print({{"pass", ok}, {"reports", reports}});
      return ok ? 0 : kExitFail;
    } else if (*dot) {
      if (what == "triangle") {
        if (arg1.empty() || arg2.empty()) throw UsageError("triangle export needs --gamma and --bypass");
        auto g = dividing_set_from_json(read_json_arg(arg1));
        std::cout << triangle_dot(triangle(g, bypass_from_json(g, read_json_arg(arg2))));
      } else {
        if (dot->count("--n") == 0 || dot->count("--e") == 0) throw UsageError(what + " export needs --n and --e");
        if (e > n) throw UsageError("need e <= n");
        check_bound(n, kEnumerateMaxN, max_n, what);
        std::cout << (what == "quiver" ? quiver_dot(n, e) : bypass_graph_dot(n, e));
      }
    }
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const Error& ex) {
    std::cerr << "invalid input: " << ex.what() << "\n";
    return kExitInvariant;
  } catch (const json::exception& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
