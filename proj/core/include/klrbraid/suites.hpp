#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "klrbraid/braidsym.hpp"
#include "klrbraid/config.hpp"

namespace klrbraid {

struct SuiteParams {
  RunConfig cfg;
  std::optional<std::string> gen;  // braid-relations: restrict to one generator, e.g. "f1"
  std::optional<int> l, n;         // nilhecke-vanishing: a single (l, n)
  int word_length = 6;             // reduced-words: Weyl group elements up to this length
  int samples = 20;                // bimodule: random samples per index
};

struct SuiteReport {
  std::string suite;
  std::string certifies;  // the statement the suite checks
  std::string datum;
  std::vector<CheckResult> checks;
  nlohmann::json data = nlohmann::json::object();

  // True if there is at least one check and all of them pass.
  bool pass() const;
  int failures() const;
};

struct SuiteInfo {
  std::string name;
  std::string certifies;
  std::function<SuiteReport(const SuiteParams&)> run;
};

const std::vector<SuiteInfo>& suites();
const SuiteInfo* find_suite(const std::string& name);
SuiteReport run_suite(const std::string& name, const SuiteParams& p);

nlohmann::json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

// Runs independent jobs on a small thread pool; results keep the job order.
std::vector<std::vector<CheckResult>> run_parallel(const std::vector<std::function<std::vector<CheckResult>()>>& jobs);

}  // namespace klrbraid
