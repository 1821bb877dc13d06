#pragma once

// Suite orchestration: every named check produces TheoremCheck records named
// "<check>/<instance>".

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlab/suite_config.hpp"
#include "hlab/theorem_harness.hpp"

namespace hlab {

inline constexpr const char* kToolVersion = "0.1.0";

struct CheckInfo {
  std::string name;
  /// the mathematical result the check exercises
  std::string result;
  std::string statement;
};

/// Sorted by name.
const std::vector<CheckInfo>& check_catalog();

struct CheckTiming {
  std::string check;
  double seconds = 0.0;
};

struct VerificationReport {
  std::string tool_version = kToolVersion;
  std::string config_digest;
  nlohmann::json config;
  /// sorted by record name
  std::vector<TheoremCheck> records;
  /// sorted by check name; kept out of the JSON report so that it stays byte-stable
  std::vector<CheckTiming> timings;

  bool pass() const;
  std::size_t failed() const;
  std::size_t errored() const;
};

/// Runs the selected checks on a pool of config.jobs workers. Each check draws
/// from derive_seed(config.seed, name); an exception inside a check becomes an
/// errored record.
VerificationReport run_suite(const SuiteConfig& config);

/// Runs one check by name. Throws UsageError for an unknown name.
std::vector<TheoremCheck> run_check(const std::string& name, const SuiteConfig& config);

}  // namespace hlab
