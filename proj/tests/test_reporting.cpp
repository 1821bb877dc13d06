#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "hlab/errors.hpp"
#include "hlab/report.hpp"
#include "hlab/suite.hpp"

using namespace hlab;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / "hlab-test-reporting" / name;
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const int status = std::system((std::string(HLAB_CLI) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

VerificationReport small_report() {
  VerificationReport r;
  r.config_digest = "0";
  TheoremCheck ok;
  ok.name = "b/ok";
  ok.lhs = 1.0;
  ok.rhs_measured = 2.0;
  finalize(ok);
  TheoremCheck bad;
  bad.name = "a/bad";
  bad.lhs = 3.0;
  bad.rhs_measured = 0.1;
  finalize(bad);
  bad.measurements = {{"ratio", INFINITY}, {"nan", NAN}};
  r.records = {bad, ok};
  return r;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto c = parse_config("[suite]\nseed = 7\nchecks = triangle_remark, moebius_involution\n[alpha]\ndyakonov = 0.3\n");
  CHECK(c.seed == 7);
  CHECK(c.checks == std::vector<std::string>{"moebius_involution", "triangle_remark"});
  CHECK(c.dyakonov_alphas == std::vector<double>{0.3});
  CHECK(parse_config("").checks == known_checks());
  CHECK(parse_config("[suite]\nchecks = none\n").checks.empty());

  CHECK_THROWS_AS(parse_config("[suite]\nsede = 7\n"), UsageError);
  CHECK_THROWS_AS(parse_config("[bogus]\nx = 1\n"), UsageError);
  CHECK_THROWS_AS(parse_config("[sampling]\npairs = 0\n"), UsageError);
  CHECK_THROWS_AS(parse_config("[sampling]\npairs = many\n"), UsageError);
  CHECK_THROWS_AS(parse_config("[alpha]\nuniform = 0.5, 1.5\n"), UsageError);
  CHECK_THROWS_AS(parse_config("[suite]\nchecks = no_such_check\n"), UsageError);
  try {
    parse_config("[domain]\ndisk_spacin = 0.1\n");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("domain.disk_spacin") != std::string::npos);
  }
  CHECK_THROWS_AS(load_config("/nonexistent/hlab.ini"), IoError);
}

TEST_CASE("default config file matches the built-in defaults") {
  const auto file = load_config(std::filesystem::path(HLAB_SOURCE_DIR) / "config" / "default.ini");
  CHECK(file.to_json() == SuiteConfig{.checks = known_checks()}.to_json());
  CHECK(config_digest(file) == config_digest(SuiteConfig{.checks = known_checks()}));
}

TEST_CASE("catalog and registry agree") {
  std::vector<std::string> names;
  for (const auto& c : check_catalog()) names.push_back(c.name);
  CHECK(names == known_checks());
  CHECK_THROWS_AS(run_check("no_such_check", SuiteConfig{}), UsageError);
}

TEST_CASE("empty selection") {
  SuiteConfig c;
  c.checks.clear();
  const auto r = run_suite(c);
  CHECK(r.records.empty());
  CHECK(r.pass());
  CHECK(to_json(r)["pass"] == true);
}

TEST_CASE("report rendering") {
  const auto r = small_report();
  CHECK_FALSE(r.pass());
  const std::string json = render_json(r);
  CHECK(json == render_json(r));
  // round trip
  const auto parsed = nlohmann::json::parse(json);
  CHECK(parsed.dump(2) + "\n" == json);
  CHECK(parsed["checks"][0]["measurements"]["ratio"] == "inf");
  CHECK(parsed["checks"][0]["measurements"]["nan"] == "nan");
  CHECK(parsed["pass"] == false);

  const std::string csv = render_csv(r);
  CHECK(csv.rfind("check,lhs,rhs,margin,pass\n", 0) == 0);
  CHECK(csv.find("a/bad,3,0.1,-2.9,false") != std::string::npos);
  CHECK(csv.find("b/ok,1,2,1,true") != std::string::npos);
}

TEST_CASE("atomic emission") {
  const auto dir = scratch("emit");
  const auto paths = emit_report(small_report(), dir / "out");
  CHECK(std::filesystem::exists(paths.json));
  CHECK(std::filesystem::exists(paths.csv));
  CHECK(std::filesystem::exists(paths.timings));
  CHECK_FALSE(std::filesystem::exists(paths.json.string() + ".tmp"));
  CHECK(slurp(paths.json) == render_json(small_report()));
  CHECK_THROWS_AS(write_atomically("/nonexistent-dir/x/report.json", "{}"), IoError);
}

TEST_CASE("a small suite is byte-stable") {
  SuiteConfig c;
  c.checks = {"moebius_differential_norm", "moebius_involution", "triangle_remark"};
  c.involution_samples = 50;
  c.triangle_pairs = 50;
  c.jobs = 2;
  const auto a = run_suite(c);
  c.jobs = 1;
  const auto b = run_suite(c);
  CHECK(render_json(a) == render_json(b));
  CHECK(a.pass());
  c.seed += 1;
  CHECK(render_json(run_suite(c)) != render_json(a));
}

TEST_CASE("errored checks are recorded") {
  SuiteConfig c;
  c.checks = {"quasi_hyperbolic_disk"};
  // radius 1 − 1e-9 lies inside the last grid cell, where 1/d blows up
  c.qh_radii = {1.0 - 1e-9};
  c.qh_spacing = 1.0 / 32;
  const auto r = run_suite(c);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].errored);
  CHECK_FALSE(r.pass());
  CHECK(to_json(r)["checks"][0].contains("error"));
}

TEST_CASE("command-line exit codes") {
  const auto dir = scratch("cli");
  const auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  CHECK(run_cli("describe") == 0);
  CHECK(run_cli("run --config " + write("empty.ini", "[suite]\nchecks = none\n") + " --out " +
                (dir / "o1").string()) == 0);
  CHECK(std::filesystem::exists(dir / "o1" / "report.json"));
  CHECK(run_cli("run --config " + write("unknown.ini", "[suite]\nchekcs = all\n")) == 2);
  CHECK(run_cli("run --config " + (dir / "missing.ini").string()) == 3);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("run --config " + write("fail.ini", "[suite]\nchecks = quasi_hyperbolic_disk\n[domain]\nqh_spacing = 0.03125\n"
                                                     "[quasi_hyperbolic]\nrelative_tolerance = 1e-12\n") +
                " --out " + (dir / "o2").string()) == 1);
  CHECK(run_cli("estimate sup --map half_affine") == 0);
  CHECK(run_cli("estimate holder --map random:1x2:3 --pairs 50") == 0);
  CHECK(run_cli("estimate sup --map no_such_map") == 2);
  CHECK(run_cli("estimate nonsense --map square") == 2);
}
