#include "hlab/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hlab/errors.hpp"

namespace hlab {
namespace {

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

nlohmann::json sanitize(nlohmann::json j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) return number(v);
  } else if (j.is_structured()) {
    for (auto& child : j) child = sanitize(std::move(child));
  }
  return j;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) records.push_back(to_json(r));
  return sanitize({{"tool", "hlab"},
                   {"version", report.tool_version},
                   {"config", report.config},
                   {"config_digest", report.config_digest},
                   {"checks", records},
                   {"summary",
                    {{"records", report.records.size()},
                     {"failed", report.failed()},
                     {"errored", report.errored()}}},
                   {"pass", report.pass()}});
}

std::string render_json(const VerificationReport& report) { return to_json(report).dump(2) + "\n"; }

std::string render_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "check,lhs,rhs,margin,pass\n";
  for (const auto& r : report.records)
    out << r.name << ',' << number(r.lhs) << ',' << number(r.rhs) << ',' << number(r.margin()) << ','
        << (r.pass() ? "true" : "false") << '\n';
  return out.str();
}

std::string render_timings(const VerificationReport& report) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& t : report.timings) j[t.check] = t.seconds;
  return nlohmann::json{{"config_digest", report.config_digest}, {"seconds", j}}.dump(2) + "\n";
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    out.close();
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

ReportPaths emit_report(const VerificationReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  ReportPaths paths{dir / "report.json", dir / "report.csv", dir / "timings.json"};
  write_atomically(paths.json, render_json(report));
  write_atomically(paths.csv, render_csv(report));
  write_atomically(paths.timings, render_timings(report));
  return paths;
}

}  // namespace hlab
