#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrf/json_io.hpp"

namespace qrf {

/// One verification check: a stable id, the law it exercises, the measured
/// residual against its pinned threshold. For witness checks (where a
/// violation must be exhibited) `lower_bound` flips the comparison.
struct SuiteCheck {
  std::string id;
  std::string anchor;
  double residual;
  double threshold;
  bool lower_bound;
  bool pass;
  double runtime_ms;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed;
  std::vector<SuiteCheck> checks;
  bool pass;
};

enum class SuiteName { kinematics, relativization, framechange, comparison, phase };

SuiteName parse_suite(const std::string& name);
std::string suite_label(SuiteName name);
std::vector<SuiteName> all_suites();

struct SuiteConfig {
  std::uint64_t seed = 7;
  int batch = 100;
};

SuiteReport run_suite(SuiteName name, const SuiteConfig& config);

Json to_json(const SuiteReport& report);
std::string format_report(const SuiteReport& report);

}  // namespace qrf
