#pragma once
// Exhaustive invariant suites over a single C_{n,e}, reported as JSON.

#include <string>
#include <vector>

#include <json.hpp>

namespace contact {

struct CheckResult {
  std::string id;
  int cases = 0;
  int failures = 0;
  nlohmann::json counterexample;  // first failing case, null when the check passed
  nlohmann::json info;            // check-specific summary
  bool pass() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  int n = 0, e = 0;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool ok() const;
  // With `timing` false the report is byte-stable across runs.
  nlohmann::json to_json(bool timing = true) const;
};

const std::vector<std::string>& suite_names();
// Suites that work in the homotopy category get the tighter default size bound.
bool suite_is_homotopical(const std::string& suite);
inline constexpr int kCombinatorialMaxN = 6;
inline constexpr int kHomotopicalMaxN = 4;

// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& suite, int n, int e);

}  // namespace contact
