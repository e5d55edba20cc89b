#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shuffleforge/json_io.hpp"
#include "shuffleforge/shuffle.hpp"

namespace shuffleforge {

struct SuiteOptions {
  std::uint64_t seed = 1;
  bool long_run = false;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  Json details = Json::object();
  double seconds = 0;
};

constexpr int kCriteria = 11;

std::string criterion_name(int id);
CheckResult run_criterion(int id, const SuiteOptions& opts);
// Every criterion, in order.
std::vector<CheckResult> run_desk_suite(const SuiteOptions& opts);

// Products built while checking the criteria; used for the closure checks.
std::vector<ShuffleElement> suite_products();

Json to_json(const CheckResult& r, bool with_timing);

}  // namespace shuffleforge
