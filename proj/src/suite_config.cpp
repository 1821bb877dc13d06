#include "hlab/suite_config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "hlab/errors.hpp"
#include "hlab/random.hpp"

namespace hlab {
namespace {

using Setter = std::function<void(SuiteConfig&, const std::string&)>;

std::string trimmed(const std::string& s) { return boost::algorithm::trim_copy(s); }

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trimmed(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v))
    throw UsageError("config key '" + key + "': not a number: '" + text + "'");
  return v;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& text) {
  const std::string t = trimmed(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw UsageError("config key '" + key + "': not a non-negative integer: '" + text + "'");
  return v;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
  const auto v = parse_unsigned(key, text);
  if (v == 0) throw UsageError("config key '" + key + "': must be positive");
  return static_cast<std::size_t>(v);
}

double parse_positive(const std::string& key, const std::string& text) {
  const double v = parse_double(key, text);
  if (!(v > 0.0)) throw UsageError("config key '" + key + "': must be positive");
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  boost::algorithm::split(parts, text, boost::algorithm::is_any_of(","));
  std::vector<std::string> out;
  for (auto& p : parts)
    if (auto t = trimmed(p); !t.empty()) out.push_back(t);
  return out;
}

std::vector<double> parse_list(const std::string& key, const std::string& text, double lo, double hi) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) {
    const double v = parse_double(key, item);
    if (!(v > lo && v < hi))
      throw UsageError("config key '" + key + "': value " + item + " outside (" + std::to_string(lo) + ", " +
                       std::to_string(hi) + ")");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("config key '" + key + "': empty list");
  return out;
}

std::vector<std::string> parse_checks(const std::string& text) {
  const std::string t = trimmed(text);
  if (t == "all") return known_checks();
  std::vector<std::string> out;
  if (t == "none") return out;
  for (const auto& name : split_list(t)) {
    if (!std::binary_search(known_checks().begin(), known_checks().end(), name))
      throw UsageError("config key 'suite.checks': unknown check '" + name + "'");
    out.push_back(name);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

#define COUNT(field) [](SuiteConfig& c, const std::string& v) { c.field = parse_count(#field, v); }
#define POSITIVE(field) [](SuiteConfig& c, const std::string& v) { c.field = parse_positive(#field, v); }

const std::map<std::string, std::map<std::string, Setter>>& schema() {
  static const std::map<std::string, std::map<std::string, Setter>> s = {
      {"suite",
       {{"checks", [](SuiteConfig& c, const std::string& v) { c.checks = parse_checks(v); }},
        {"seed", [](SuiteConfig& c, const std::string& v) { c.seed = parse_unsigned("suite.seed", v); }},
        {"output_dir",
         [](SuiteConfig& c, const std::string& v) {
           c.output_dir = trimmed(v);
           if (c.output_dir.empty()) throw UsageError("config key 'suite.output_dir': empty");
         }},
        {"jobs", [](SuiteConfig& c, const std::string& v) { c.jobs = parse_unsigned("suite.jobs", v); }}}},
      {"tolerances",
       {{"absolute",
         [](SuiteConfig& c, const std::string& v) {
           c.tolerances.absolute = parse_double("tolerances.absolute", v);
           if (c.tolerances.absolute < 0.0) throw UsageError("config key 'tolerances.absolute': negative");
         }},
        {"sampling_slack",
         [](SuiteConfig& c, const std::string& v) {
           c.tolerances.sampling_slack = parse_positive("tolerances.sampling_slack", v);
         }}}},
      {"domain",
       {{"disk_spacing", POSITIVE(disk_spacing)},
        {"qh_spacing", POSITIVE(qh_spacing)},
        {"ball_spacing", POSITIVE(ball_spacing)},
        {"uniform_c",
         [](SuiteConfig& c, const std::string& v) {
           c.uniform_c = parse_double("domain.uniform_c", v);
           if (c.uniform_c < 1.0) throw UsageError("config key 'domain.uniform_c': must be at least 1");
         }},
        {"cone_c",
         [](SuiteConfig& c, const std::string& v) {
           c.cone_c = parse_double("domain.cone_c", v);
           if (c.cone_c < 1.0) throw UsageError("config key 'domain.cone_c': must be at least 1");
         }}}},
      {"sampling",
       {{"pairs", COUNT(pairs)},
        {"hl_pairs", COUNT(hl_pairs)},
        {"centers", COUNT(centers)},
        {"local_per_center", COUNT(local_per_center)},
        {"certificate_pairs", COUNT(certificate_pairs)},
        {"maps_per_case", COUNT(maps_per_case)},
        {"battery_maps", COUNT(battery_maps)},
        {"regularity_maps", COUNT(regularity_maps)},
        {"regularity_centers", COUNT(regularity_centers)},
        {"involution_samples", COUNT(involution_samples)},
        {"bridge_points", COUNT(bridge_points)},
        {"triangle_pairs", COUNT(triangle_pairs)}}},
      {"alpha",
       {{"hardy_littlewood",
         [](SuiteConfig& c, const std::string& v) { c.hl_alphas = parse_list("alpha.hardy_littlewood", v, 0.0, 1.0); }},
        {"uniform",
         [](SuiteConfig& c, const std::string& v) { c.uniform_alphas = parse_list("alpha.uniform", v, 0.0, 1.0); }},
        {"dyakonov",
         [](SuiteConfig& c, const std::string& v) { c.dyakonov_alphas = parse_list("alpha.dyakonov", v, 0.0, 1.0); }},
        {"main",
         [](SuiteConfig& c, const std::string& v) {
           c.main_alpha = parse_list("alpha.main", v, 0.0, 1.0).front();
         }}}},
      {"quasi_hyperbolic",
       {{"radii", [](SuiteConfig& c, const std::string& v) { c.qh_radii = parse_list("quasi_hyperbolic.radii", v, 0.0, 1.0); }},
        {"relative_tolerance", POSITIVE(qh_relative_tolerance)}}},
  };
  return s;
}

#undef COUNT
#undef POSITIVE

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"dyakonov_corollaries", "frechet_bridge",        "hardy_littlewood_disk",
                               "main_theorem",         "moebius_differential_norm", "moebius_involution",
                               "lipschitz_from_bloch",      "bloch_from_lipschitz",       "quasi_hyperbolic_disk",
                               "regularity_constants", "schwarz_pick_battery",  "triangle_remark",
                               "uniform_domain_lemma"};
    std::sort(v.begin(), v.end());
    return v;
  }();
  return names;
}

SuiteConfig parse_config(const std::string& text) {
  boost::property_tree::ptree tree;
  std::istringstream in(text);
  try {
    boost::property_tree::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw UsageError(std::string("config: ") + e.message() + " at line " + std::to_string(e.line()));
  }
  SuiteConfig config;
  config.checks = known_checks();
  for (const auto& [section, body] : tree) {
    const auto sec = schema().find(section);
    if (sec == schema().end()) {
      if (body.empty()) throw UsageError("config key '" + section + "': outside any section");
      throw UsageError("config section '" + section + "': unknown");
    }
    for (const auto& [key, value] : body) {
      const auto it = sec->second.find(key);
      if (it == sec->second.end()) throw UsageError("config key '" + section + "." + key + "': unknown");
      it->second(config, value.data());
    }
  }
  return config;
}

SuiteConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

nlohmann::json SuiteConfig::to_json() const {
  return {{"suite", {{"checks", checks}, {"seed", seed}}},
          {"tolerances", {{"absolute", tolerances.absolute}, {"sampling_slack", tolerances.sampling_slack}}},
          {"domain",
           {{"disk_spacing", disk_spacing},
            {"qh_spacing", qh_spacing},
            {"ball_spacing", ball_spacing},
            {"uniform_c", uniform_c},
            {"cone_c", cone_c}}},
          {"sampling",
           {{"pairs", pairs},
            {"hl_pairs", hl_pairs},
            {"centers", centers},
            {"local_per_center", local_per_center},
            {"certificate_pairs", certificate_pairs},
            {"maps_per_case", maps_per_case},
            {"battery_maps", battery_maps},
            {"regularity_maps", regularity_maps},
            {"regularity_centers", regularity_centers},
            {"involution_samples", involution_samples},
            {"bridge_points", bridge_points},
            {"triangle_pairs", triangle_pairs}}},
          {"alpha",
           {{"hardy_littlewood", hl_alphas},
            {"uniform", uniform_alphas},
            {"dyakonov", dyakonov_alphas},
            {"main", main_alpha}}},
          {"quasi_hyperbolic", {{"radii", qh_radii}, {"relative_tolerance", qh_relative_tolerance}}}};
}

std::string config_digest(const SuiteConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(stable_hash(config.to_json().dump())));
  return buf;
}

}  // namespace hlab
