#pragma once

// Randomized numeric verification suites over sampled period matrices.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace a22::theta {

// Acceptance thresholds for the suites.
inline constexpr double kResidualTolerance = 1e-9;
inline constexpr double kModularitySpread = 1e-9;
inline constexpr double kCocycleTolerance = 1e-12;
// Floating slack added to certified truncation bounds when two evaluations are compared.
inline constexpr double kFloatSlack = 1e-13;
inline constexpr double kRosenhainAgreement = 1e-8;
inline constexpr double kWeierstrassSeparation = 1e-6;

struct SuiteResult {
  std::string name;
  bool passed = true;
  int samples = 0;
  double worst = 0;          // the suite's headline error metric
  nlohmann::json details;
};

// Suites: equations, modularity, splitting, rosenhain, smallsets.
std::vector<std::string> suite_names();
// ConfigurationError on an unknown suite name.
SuiteResult run_suite(const std::string& name, int samples, std::uint64_t seed, double tol);

nlohmann::json to_json(const SuiteResult& r);

}  // namespace a22::theta
