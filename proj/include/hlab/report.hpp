#pragma once

// Report emission. JSON keys are sorted, floats are shortest round-trip and
// non-finite numbers are written as the strings "inf", "-inf" and "nan".

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hlab/suite.hpp"

namespace hlab {

nlohmann::json to_json(const VerificationReport& report);

/// Replaces non-finite numbers by strings, recursively.
nlohmann::json sanitize(nlohmann::json j);

std::string render_json(const VerificationReport& report);
/// Header check,lhs,rhs,margin,pass; one row per record.
std::string render_csv(const VerificationReport& report);
std::string render_timings(const VerificationReport& report);

/// Writes path.tmp and renames it over path. Throws IoError.
void write_atomically(const std::filesystem::path& path, const std::string& content);

struct ReportPaths {
  std::filesystem::path json;
  std::filesystem::path csv;
  std::filesystem::path timings;
};

/// report.json, report.csv and timings.json in dir (created if missing).
ReportPaths emit_report(const VerificationReport& report, const std::filesystem::path& dir);

}  // namespace hlab
