#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CONTACT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kNested = R"('{"n":4,"e":2,"components":[{"v":"*","labels":[0]},{"v":[1],"labels":[1,4]},{"v":[1,1],"labels":[2,3]}]}')";
// The basic set of C_{4,2} with the given based labels, as printed by enumerate.
std::string basic(const std::vector<int>& labels) {
  auto all = nlohmann::json::parse(run("enumerate --n 4 --e 2").out);
  for (const auto& g : all)
    for (const auto& c : g["components"])
      if (c["v"] == "*" && c["labels"] == nlohmann::json(labels)) return "'" + g.dump() + "'";
  return "'{}'";
}

}  // namespace

TEST_CASE("cli enumerate counts") {
  CHECK(run("enumerate --n 2 --e 1 --format count").out == "3\n");
  CHECK(run("enumerate --n 3 --e 1 --format count").out == "6\n");
  auto r = run("enumerate --n 4 --e 2 --format count");
  CHECK(r.code == 0);
  CHECK(r.out == "20\n");
  auto j = nlohmann::json::parse(run("enumerate --n 2 --e 1").out);
  CHECK(j.size() == 3);
}

TEST_CASE("cli bounds and bad arguments") {
  CHECK(run("enumerate --n 9 --e 1 --format count").code == 2);
  CHECK(run("--max-n 9 enumerate --n 9 --e 0 --format count").out == "1\n");
  CHECK(run("enumerate --n 2 --e 3").code == 2);
  CHECK(run("enumerate --n 2").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify --n 5 --suite faithful").code == 2);
  CHECK(run("complex '{not json'").code == 2);
}

TEST_CASE("cli invariant violations exit 3") {
  CHECK(run(R"(complex '{"n":2,"e":0,"components":[{"v":"*","labels":[0]},{"v":[1],"labels":[1,2]}]}')").code == 3);
  CHECK(run("chainmap " + kNested + R"( '{"uv":[1,1],"ov":[1],"x":9,"y":1,"z":1}')").code == 3);
}

TEST_CASE("cli complex, hom and homdim") {
  auto r = run("complex " + kNested);
  REQUIRE(r.code == 0);
  auto c = nlohmann::json::parse(r.out);
  CHECK(c["summands"].size() == 4);
  CHECK(c["d"].size() == 3);

  CHECK(nlohmann::json::parse(run("hom " + basic({0, 1, 2}) + " " + basic({0, 2, 4})).out)["dim"] == 0);
  CHECK(nlohmann::json::parse(run("hom " + basic({0, 1, 3}) + " " + basic({0, 2, 4})).out)["dim"] == 1);

  const std::string cx = "'" + r.out + "'";
  auto h = nlohmann::json::parse(run("homdim " + cx + " " + cx).out);
  CHECK(h["total"] == 1);
}

TEST_CASE("cli chainmap and triangle") {
  const std::string mv = R"('{"uv":[1,1],"ov":[1],"x":1,"y":1,"z":1}')";
  auto f = nlohmann::json::parse(run("chainmap " + kNested + " " + mv).out);
  CHECK(f["f"].size() == 3);
  auto t = nlohmann::json::parse(run("triangle " + kNested + " " + mv).out);
  CHECK(t["gamma"].size() == 3);
  int sum = 0;
  for (const auto& k : t["degrees"]) sum += k.get<int>();
  CHECK(sum == 1);
}

TEST_CASE("cli verify suites") {
  auto r = run("verify --n 3 --e 1 --suite triangles");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["reports"][0]["checks"][0]["info"]["objects"] == 6);
  CHECK(run("verify --n 4 --e 2 --suite functor").code == 0);
  CHECK(run("verify --n 4 --e 2 --suite faithful").code == 0);
  // Output without timing is byte-stable.
  CHECK(run("verify --n 3 --suite divset").out == run("verify --n 3 --suite divset").out);
}

TEST_CASE("cli DOT export") {
  auto q = run("export-dot quiver --n 2 --e 1");
  CHECK(q.code == 0);
  int arrows = 0;
  for (auto p = q.out.find("->"); p != std::string::npos; p = q.out.find("->", p + 2)) ++arrows;
  CHECK(arrows == 1);

  auto g = run("export-dot bypass-graph --n 3 --e 1");
  int edges = 0;
  for (auto p = g.out.find(" -- "); p != std::string::npos; p = g.out.find(" -- ", p + 4)) ++edges;
  CHECK(edges == 12);

  auto t = run("export-dot triangle --gamma " + kNested + R"( --bypass '{"uv":[1,1],"ov":[1],"x":1,"y":1,"z":1}')");
  int tedges = 0;
  for (auto p = t.out.find("->"); p != std::string::npos; p = t.out.find("->", p + 2)) ++tedges;
  CHECK(tedges == 3);
  CHECK(run("export-dot quiver").code == 2);
}
