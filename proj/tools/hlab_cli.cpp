// hlab: run the verification suite, evaluate one estimator, or list the checks.
//
// Exit status: 0 all checks pass, 1 a check failed or errored, 2 usage error,
// 3 I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "hlab/errors.hpp"
#include "hlab/moebius_ball.hpp"
#include "hlab/report.hpp"
#include "hlab/suite.hpp"

using namespace hlab;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct EstimateArgs {
  std::string estimator;
  std::string map = "square";
  std::string map_file = std::string(HLAB_SOURCE_DIR) + "/data/polynomial_corpus.json";
  double alpha = 0.5;
  std::size_t pairs = 1000;
  std::size_t points = 40;
  std::uint64_t seed = 1;
  std::vector<double> point;
  bool normalize = false;
};

AnalyticMapPtr resolve_map(const EstimateArgs& a) {
  if (a.map == "power_branch") return std::make_shared<ClosedFormMap>(ClosedFormMap::power_branch(a.alpha));
  if (a.map.rfind("random:", 0) == 0) {
    // random:<n>x<m>:<degree>
    std::size_t n = 0, m = 0;
    int degree = 0;
    if (std::sscanf(a.map.c_str(), "random:%zux%zu:%d", &n, &m, &degree) != 3)
      throw UsageError("--map random:<n>x<m>:<degree> expected, got '" + a.map + "'");
    Rng rng(a.seed);
    return std::make_shared<PolynomialMap>(random_polynomial(n, m, degree, rng).with_label(a.map));
  }
  std::ifstream in(a.map_file);
  if (!in) throw IoError("cannot read map corpus " + a.map_file);
  nlohmann::json corpus;
  try {
    corpus = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("map corpus " + a.map_file + ": " + e.what());
  }
  for (const auto& entry : corpus.at("maps"))
    if (entry.value("label", "") == a.map) return std::make_shared<PolynomialMap>(PolynomialMap::from_json(entry));
  throw UsageError("unknown map '" + a.map + "' (not in " + a.map_file + ")");
}

int run_estimate(const EstimateArgs& a) {
  AnalyticMapPtr f = resolve_map(a);
  if (a.normalize) {
    const auto* poly = dynamic_cast<const PolynomialMap*>(f.get());
    if (!poly) throw UsageError("--normalize applies to polynomial maps only");
    f = std::make_shared<PolynomialMap>(normalize_on_ball(*poly).map);
  }
  const std::size_t n = f->source_dim();
  const auto domain =
      n == 1 ? DiscretizedDomain::unit_disk() : DiscretizedDomain::unit_ball(2 * n, 1.0 / 8);
  Rng rng(a.seed);
  const SampledMap F = as_sampled_map(f);
  const auto here = [&] {
    if (a.point.empty()) return Point(2 * n, 0.0);
    if (a.point.size() != 2 * n) throw UsageError("--point needs " + std::to_string(2 * n) + " real coordinates");
    return Point(a.point.begin(), a.point.end());
  };

  nlohmann::json out = {{"estimator", a.estimator}, {"map", f->label()}, {"seed", a.seed}};
  if (a.estimator == "holder") {
    PairSamplingOptions po;
    po.count = a.pairs;
    const auto pairs = sample_pairs(domain, rng, po);
    out["alpha"] = a.alpha;
    out["result"] = to_json(holder_seminorm(F, pairs, Majorant::power(a.alpha)));
  } else if (a.estimator == "bloch") {
    const auto pts = sample_points(domain, rng, a.points, 1e-3);
    DilatationOptions o;
    out["result"] = to_json(bloch_norm(F, WeightField::boundary_distance(domain), domain, pts, o));
  } else if (a.estimator == "dilatation") {
    DilatationOptions o;
    const Point x = here();
    o.admissible_radius = domain.boundary_distance(x);
    out["result"] = to_json(upper_dilatation(F, x, o));
  } else if (a.estimator == "bridge") {
    out["result"] = to_json(differential_norm_dilatation_bridge(f, here()));
  } else if (a.estimator == "regularity") {
    const auto centers = sample_points(domain, rng, a.points, 0.05);
    out["result"] = to_json(bounded_regularity_check(f, domain, centers));
  } else if (a.estimator == "sup") {
    const auto s = ball_sup_norm(*f);
    out["result"] = {{"value", s.value}, {"witness", to_real(s.witness)}};
  } else if (a.estimator == "schwarz_pick") {
    out["result"] = to_json(schwarz_pick_check(*f));
  } else {
    throw UsageError("unknown estimator '" + a.estimator + "'");
  }
  std::cout << sanitize(out).dump(2) << "\n";
  return 0;
}

int run_describe(bool as_json) {
  if (as_json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : check_catalog()) j.push_back({{"name", c.name}, {"result", c.result}, {"statement", c.statement}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& c : check_catalog())
    std::cout << c.name << "\n  " << c.result << "\n  " << c.statement << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of Lipschitz, Bloch and Hardy-Littlewood type estimates"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<std::size_t> jobs;
  bool quiet = false;
  auto* run = app.add_subcommand("run", "Run the verification suite");
  run->add_option("--config", config_path, "INI config file")->required();
  run->add_option("--seed", seed, "Override [suite] seed");
  run->add_option("--out", out_dir, "Override [suite] output_dir");
  run->add_option("--jobs", jobs, "Override [suite] jobs");
  run->add_flag("--quiet", quiet, "Print only the summary line");

  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate", "Evaluate one estimator on one map and print JSON");
  estimate->add_option("estimator", est.estimator, "holder | bloch | dilatation | bridge | regularity | sup | schwarz_pick")
      ->required();
  estimate->add_option("--map", est.map, "Corpus label, power_branch, or random:<n>x<m>:<degree>");
  estimate->add_option("--map-file", est.map_file, "Polynomial corpus JSON");
  estimate->add_option("--alpha", est.alpha, "Hoelder exponent / branch exponent")->check(CLI::Range(0.0, 1.0));
  estimate->add_option("--pairs", est.pairs, "Sampled pairs")->check(CLI::PositiveNumber);
  estimate->add_option("--points", est.points, "Sampled points or centres")->check(CLI::PositiveNumber);
  estimate->add_option("--seed", est.seed, "RNG seed");
  estimate->add_option("--point", est.point, "Point in real coordinates")->delimiter(',');
  estimate->add_flag("--normalize", est.normalize, "Divide a polynomial by its sup on the ball");

  bool describe_json = false;
  auto* describe = app.add_subcommand("describe", "List the checks and the results they exercise");
  describe->add_flag("--json", describe_json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*describe) return run_describe(describe_json);
    if (*estimate) return run_estimate(est);

    SuiteConfig config = load_config(config_path);
    if (seed) config.seed = *seed;
    if (out_dir) config.output_dir = *out_dir;
    if (jobs) config.jobs = *jobs;
    const auto report = run_suite(config);
    const auto paths = emit_report(report, config.output_dir);
    if (!quiet)
      for (const auto& r : report.records)
        if (!r.pass()) std::cout << (r.errored ? "ERROR " : "FAIL  ") << r.name << "  margin " << r.margin()
                                 << (r.errored ? "  " + r.error : "") << "\n";
    std::cout << (report.pass() ? "PASS" : "FAIL") << ": " << report.records.size() << " records, "
              << report.failed() << " failed (" << report.errored() << " errored); report " << paths.json.string()
              << "\n";
    return report.pass() ? 0 : kExitFail;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
