// Acceptance run: executes the default suite twice and prints one PASS/FAIL
// line per criterion. Exit status is 0 unless a criterion outside
// kKnownFailures fails.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "hlab/report.hpp"
#include "hlab/suite.hpp"

using namespace hlab;

namespace {

// Criterion 7 for p = 1 is false as stated: the scalar 1-regularity constant of
// a bounded analytic function can exceed 1 (README, "Known failure").
const std::set<int> kKnownFailures = {7};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

struct Tally {
  std::size_t count = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

Tally tally(const VerificationReport& r, const std::string& prefix,
            const std::function<bool(const TheoremCheck&)>& extra = {}) {
  Tally t;
  for (const auto& c : r.records) {
    if (!starts_with(c.name, prefix)) continue;
    ++t.count;
    if (!c.pass() || (extra && !extra(c))) {
      if (t.failed++ == 0) {
        std::ostringstream os;
        os << c.name << " lhs=" << c.lhs << " rhs=" << c.rhs;
        if (c.errored) os << " error: " << c.error;
        t.first_failure = os.str();
      }
    }
  }
  return t;
}

}  // namespace

int main() {
  const auto config_path = std::filesystem::path(HLAB_SOURCE_DIR) / "config" / "default.ini";
  SuiteConfig config = load_config(config_path);
  const auto base = std::filesystem::temp_directory_path() / "hlab-acceptance";

  config.output_dir = (base / "run1").string();
  const auto first = run_suite(config);
  const auto p1 = emit_report(first, config.output_dir);
  config.output_dir = (base / "run2").string();
  const auto second = run_suite(config);
  const auto p2 = emit_report(second, config.output_dir);

  std::map<int, std::pair<bool, std::string>> results;
  const auto criterion = [&](int id, const Tally& t, std::size_t expected_records) {
    std::ostringstream os;
    os << t.count << " records";
    if (t.count != expected_records) os << " (expected " << expected_records << ")";
    if (t.failed) os << ", " << t.failed << " failed; first: " << t.first_failure;
    results[id] = {t.count == expected_records && t.failed == 0, os.str()};
  };

  const auto& r = first;
  const auto sampled = [&](std::size_t n) {
    return [n](const TheoremCheck& c) { return c.inputs.value("samples", 0u) >= n; };
  };
  criterion(1, tally(r, "moebius_involution/", sampled(1000)), 6);
  criterion(2, tally(r, "moebius_differential_norm/"), 4);
  criterion(3, tally(r, "schwarz_pick_battery/", [](const TheoremCheck& c) { return c.inputs.value("maps", 0u) >= 200; }), 6);
  criterion(4, tally(r, "quasi_hyperbolic_disk/", [](const TheoremCheck& c) { return c.inputs.value("spacing", 1.0) <= 1.0 / 512; }), 3);
  criterion(5, tally(r, "uniform_domain_lemma/", [](const TheoremCheck& c) { return c.inputs.value("pairs", 0u) >= 1000; }), 4);
  criterion(6, tally(r, "hardy_littlewood_disk/", [](const TheoremCheck& c) { return c.inputs.value("pairs", 0u) >= 10000; }), 6);
  criterion(7, tally(r, "regularity_constants/"), 3 * config.regularity_maps);
  {
    // 20 random maps per case and α, plus the named examples
    const std::size_t expected = config.dyakonov_alphas.size() * (3 * config.maps_per_case + 3);
    criterion(8, tally(r, "dyakonov_corollaries/"), expected);
  }
  criterion(9, tally(r, "triangle_remark/", [](const TheoremCheck& c) { return c.inputs.value("pairs", 0u) >= 1000; }), 6);
  criterion(10, tally(r, "frechet_bridge/", [](const TheoremCheck& c) {
              return c.inputs.value("points", 0u) >= 50 && c.measurements.value("smallest_radius", 1.0) <= 1e-4 * (1 + 1e-12);
            }), 3);
  {
    const bool same = slurp(p1.json) == slurp(p2.json) && !slurp(p1.json).empty();
    const bool same_csv = slurp(p1.csv) == slurp(p2.csv);
    results[11] = {same && same_csv, same && same_csv ? "report.json and report.csv byte-identical across two runs"
                                                      : "reports differ between runs"};
  }

  const char* names[] = {"",
                         "moebius involution",
                         "differential-norm split",
                         "Schwarz-Pick battery",
                         "quasi-hyperbolic disk oracle",
                         "uniform-domain lemma",
                         "Hardy-Littlewood both directions",
                         "regularity constants",
                         "Dyakonov corollaries",
                         "triangle remark",
                         "Frechet bridge",
                         "determinism"};
  int unexpected = 0;
  for (const auto& [id, res] : results) {
    const bool known = kKnownFailures.count(id) > 0;
    std::printf("%s %2d %-34s %s%s\n", res.first ? "PASS" : "FAIL", id, names[id], res.second.c_str(),
                !res.first && known ? " [known failure]" : "");
    if (!res.first && !known) ++unexpected;
  }
  std::printf("suite: %zu records, %zu failed, %zu errored\n", r.records.size(), r.failed(), r.errored());
  return unexpected == 0 ? 0 : 1;
}
