#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fh {

struct SuiteResult {
  int id = 0;
  std::string name;
  bool passed = false;
  long long checks = 0;
  long long failures = 0;
  double seconds = 0;
  double budget_seconds = 0;
  std::vector<std::string> messages;  // first failures, then notes
  nlohmann::json to_json() const;
  std::string line() const;  // "[PASS] 1 name: ..."
};

// (type, d) pairs exercised by the alcove and structural suites.
const std::vector<std::pair<std::string, int>>& supported_folds();

// Acceptance suites 1..11 in a fixed order.
const std::vector<std::string>& suite_names();
// name or number; throws ValidationError for an unknown suite.
int suite_id(const std::string& name);
SuiteResult run_suite(int id, uint64_t seed = 20240611);
std::vector<SuiteResult> run_all(uint64_t seed = 20240611);

}  // namespace fh
