#pragma once

// Suite configuration: an INI file with sections [suite], [tolerances],
// [domain], [sampling], [alpha] and [quasi_hyperbolic]. Every key is optional;
// unknown sections or keys are a UsageError naming the key.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlab/theorem_harness.hpp"

namespace hlab {

struct SuiteConfig {
  /// Sorted, unique. Empty selects nothing.
  std::vector<std::string> checks;
  std::uint64_t seed = 20240901;
  std::string output_dir = "hlab-report";
  /// Worker threads; 0 uses the hardware concurrency.
  std::size_t jobs = 0;

  HarnessTolerances tolerances{};

  double disk_spacing = 1.0 / 64;
  double qh_spacing = 1.0 / 512;
  double ball_spacing = 1.0 / 8;
  /// uniformity constant of the unit ball used in the constants 2c/α, 4c/α, 8c/α
  double uniform_c = 2.0;
  /// constant certified for the cone arcs of the disk
  double cone_c = 2.05;

  std::size_t pairs = 1000;
  std::size_t hl_pairs = 10000;
  std::size_t centers = 40;
  std::size_t local_per_center = 64;
  std::size_t certificate_pairs = 50;
  std::size_t maps_per_case = 20;
  std::size_t battery_maps = 200;
  std::size_t regularity_maps = 5;
  std::size_t regularity_centers = 8;
  std::size_t involution_samples = 1000;
  std::size_t bridge_points = 50;
  std::size_t triangle_pairs = 1000;

  std::vector<double> hl_alphas = {0.25, 0.5, 0.75};
  std::vector<double> uniform_alphas = {0.25, 0.5, 0.75};
  std::vector<double> dyakonov_alphas = {0.4, 0.6};
  double main_alpha = 0.5;

  std::vector<double> qh_radii = {0.3, 0.6, 0.9};
  double qh_relative_tolerance = 0.02;

  /// Everything except output_dir and jobs, which do not change any number
  /// in the report.
  nlohmann::json to_json() const;
};

/// Names of every check the suite knows, sorted.
const std::vector<std::string>& known_checks();

/// Parses INI text. "all" in [suite] checks selects every known check.
SuiteConfig parse_config(const std::string& text);
/// Throws IoError if the file cannot be read.
SuiteConfig load_config(const std::filesystem::path& path);

/// Hex digest of the canonical JSON form of the config.
std::string config_digest(const SuiteConfig& config);

}  // namespace hlab
