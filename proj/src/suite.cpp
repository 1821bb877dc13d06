#include "hlab/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <thread>

#include "hlab/errors.hpp"
#include "hlab/moebius_ball.hpp"
#include "hlab/weighted_distance.hpp"

namespace hlab {
namespace {

using Records = std::vector<TheoremCheck>;

std::string fmt(double v) {
  nlohmann::json j = v;
  return j.dump();
}

/// lhs ≤ threshold with constant 1; the threshold is exact, never sampled.
TheoremCheck bound_record(std::string name, std::string statement, nlohmann::json inputs, double lhs,
                          double threshold, double tolerance, bool lhs_sampled) {
  TheoremCheck c;
  c.name = std::move(name);
  c.statement = std::move(statement);
  c.inputs = std::move(inputs);
  c.lhs = lhs;
  c.rhs_measured = threshold;
  c.constant = 1.0;
  c.tolerance = tolerance;
  c.bias = {lhs_sampled, false, 0.0, ""};
  finalize(c);
  return c;
}

TheoremCheck errored_record(std::string name, nlohmann::json inputs, const std::string& what) {
  TheoremCheck c;
  c.name = std::move(name);
  c.inputs = std::move(inputs);
  c.errored = true;
  c.error = what;
  return c;
}

/// Runs body and renames its record; an exception becomes an errored record.
template <class F>
TheoremCheck guarded(const std::string& name, const nlohmann::json& inputs, F&& body) {
  try {
    TheoremCheck c = body();
    c.name = name;
    return c;
  } catch (const std::exception& e) {
    return errored_record(name, inputs, e.what());
  }
}

CVector random_ball_point(std::size_t m, Rng& rng, double max_radius) {
  CVector z(m);
  for (auto& c : z) c = {rng.normal(), rng.normal()};
  const double r = max_radius * std::pow(rng.uniform(), 1.0 / (2.0 * static_cast<double>(m)));
  return cscale(z, r / cnorm(z));
}

CVector random_with_norm(std::size_t m, double r, Rng& rng) {
  if (r == 0.0) return CVector(m, Complex(0.0));
  CVector z(m);
  for (auto& c : z) c = {rng.normal(), rng.normal()};
  return cscale(z, r / cnorm(z));
}

AnalyticMapPtr normalized_random(std::size_t n, std::size_t m, int degree, Rng& rng, const std::string& label) {
  auto f = normalize_on_ball(random_polynomial(n, m, degree, rng)).map.with_label(label);
  return std::make_shared<PolynomialMap>(std::move(f));
}

DiscretizedDomain ball_of(std::size_t n, const SuiteConfig& cfg) {
  return n == 1 ? DiscretizedDomain::unit_disk(cfg.disk_spacing) : DiscretizedDomain::unit_ball(2 * n, cfg.ball_spacing);
}

std::string dims(std::size_t n, std::size_t m) { return "C" + std::to_string(n) + "->C" + std::to_string(m); }

// ---------------------------------------------------------------------------

Records moebius_involution(const SuiteConfig& cfg, std::uint64_t seed) {
  Records out;
  for (std::size_t m : {1u, 2u, 5u}) {
    Rng rng(derive_seed(seed, m));
    double worst = 0.0, worst_origin = 0.0;
    nlohmann::json witness = nlohmann::json::object();
    for (std::size_t i = 0; i < cfg.involution_samples; ++i) {
      const MoebiusTransform T(random_ball_point(m, rng, 0.999));
      const CVector z = random_ball_point(m, rng, 0.999);
      const double e = cnorm(csub(T.apply(T.apply(z)), z));
      if (e > worst) {
        worst = e;
        witness = {{"a", to_real(T.center())}, {"z", to_real(z)}};
      }
      worst_origin = std::max(worst_origin, cnorm(csub(T.apply(CVector(m, Complex(0.0))), T.center())));
    }
    const nlohmann::json inputs = {{"dim", m}, {"samples", cfg.involution_samples}, {"max_norm", 0.999}};
    auto inv = bound_record("moebius_involution/dim=" + std::to_string(m) + "/involution",
                            "max ||phi_a(phi_a(z)) - z|| <= 1e-10", inputs, worst, 1e-10, 0.0, true);
    inv.witness = witness;
    out.push_back(inv);
    out.push_back(bound_record("moebius_involution/dim=" + std::to_string(m) + "/origin",
                               "max ||phi_a(0) - a|| <= 1e-12", inputs, worst_origin, 1e-12, 0.0, true));
  }
  return out;
}

Records moebius_differential_norm(const SuiteConfig&, std::uint64_t seed) {
  Records out;
  for (std::size_t m : {1u, 2u, 3u, 5u}) {
    Rng rng(derive_seed(seed, m));
    double worst = 0.0;
    nlohmann::json measurements = nlohmann::json::array();
    for (int k = 0; k <= 10; ++k) {
      const double r = k < 10 ? 0.1 * k : 0.95;
      const MoebiusTransform T(random_with_norm(m, r, rng));
      const double norm = operator_norm(T.differential_at_zero());
      const double expected = m == 1 ? 1.0 - r * r : std::sqrt(1.0 - r * r);
      worst = std::max(worst, std::abs(norm - expected));
      measurements.push_back({{"norm_a", r}, {"differential_norm", norm}, {"expected", expected}});
    }
    auto c = bound_record("moebius_differential_norm/dim=" + std::to_string(m),
                          m == 1 ? "max | ||dphi_a(0)|| - (1 - |a|^2) | <= 1e-8"
                                 : "max | ||dphi_a(0)|| - sqrt(1 - ||a||^2) | <= 1e-8",
                          {{"dim", m}}, worst, 1e-8, 0.0, false);
    c.measurements = {{"grid", measurements}};
    out.push_back(c);
  }
  return out;
}

Records schwarz_pick_battery(const SuiteConfig& cfg, std::uint64_t seed) {
  Records out;
  for (std::size_t n : {1u, 2u})
    for (std::size_t m : {1u, 2u, 3u}) {
      const std::string name = "schwarz_pick_battery/" + dims(n, m);
      const nlohmann::json inputs = {{"source_dim", n}, {"target_dim", m}, {"maps", cfg.battery_maps}, {"degree", 3}};
      out.push_back(guarded(name, inputs, [&] {
        Rng rng(derive_seed(seed, dims(n, m)));
        double worst = INFINITY, worst_chain = INFINITY;
        nlohmann::json worst_report, worst_map;
        for (std::size_t i = 0; i < cfg.battery_maps; ++i) {
          const auto f = normalize_on_ball(random_polynomial(n, m, 3, rng)).map;
          const auto rep = schwarz_pick_check(f);
          worst_chain = std::min(worst_chain, rep.chain_slack);
          if (rep.slack < worst) {
            worst = rep.slack;
            worst_report = to_json(rep);
            worst_map = f.to_json();
          }
        }
        auto c = bound_record(name, "max over the battery of ||df(0)|| - bound <= 0", inputs,
                              -std::min(worst, worst_chain), 0.0, 1e-9, false);
        c.measurements = {{"worst_slack", worst}, {"worst_chain_slack", worst_chain}, {"worst_report", worst_report}};
        c.witness = {{"map", worst_map}};
        return c;
      }));
    }
  return out;
}

Records quasi_hyperbolic_disk(const SuiteConfig& cfg, std::uint64_t) {
  Records out;
  const auto disk = DiscretizedDomain::unit_disk(cfg.qh_spacing);
  const Point origin{0.0, 0.0};
  std::unique_ptr<GridDistanceField> field;
  for (double r : cfg.qh_radii) {
    const std::string name = "quasi_hyperbolic_disk/r=" + fmt(r);
    const nlohmann::json inputs = {{"r", r}, {"spacing", cfg.qh_spacing}};
    out.push_back(guarded(name, inputs, [&] {
      if (!field) field = std::make_unique<GridDistanceField>(disk, WeightField::power(disk, -1.0), origin);
      const double grid = field->to({r, 0.0});
      const double oracle = std::log(1.0 / (1.0 - r));
      auto c = bound_record(name, "|grid - log(1/(1-r))| / log(1/(1-r)) <= tolerance", inputs,
                            std::abs(grid - oracle) / oracle, cfg.qh_relative_tolerance, 0.0, false);
      c.measurements = {{"grid", grid}, {"oracle", oracle}, {"nodes", field->node_count()}};
      return c;
    }));
  }
  return out;
}

Records uniform_domain_lemma(const SuiteConfig& cfg, std::uint64_t seed) {
  Records out;
  const auto disk = DiscretizedDomain::unit_disk(cfg.disk_spacing);
  Rng rng(seed);
  PairSamplingOptions po;
  po.count = cfg.pairs;
  const auto pairs = sample_pairs(disk, rng, po);
  const auto family = cone_arcs(disk);

  const nlohmann::json arc_inputs = {{"c", cfg.cone_c}, {"pairs", pairs.size()}, {"curves", "cone arcs"}};
  out.push_back(guarded("uniform_domain_lemma/arcs", arc_inputs, [&] {
    const auto cert = certify_uniform_family(disk, family, cfg.cone_c, pairs);
    auto c = bound_record("", "cone arcs satisfy the length and cigar conditions with c", arc_inputs,
                          -std::min(cert.worst_margin_i, cert.worst_margin_ii), 0.0, 0.0, true);
    c.measurements = to_json(cert);
    c.witness = {{"x", cert.witness_x}, {"y", cert.witness_y}, {"z", cert.witness_z}};
    return c;
  }));
  for (double alpha : cfg.uniform_alphas) {
    const nlohmann::json inputs = {{"alpha", alpha}, {"c", cfg.uniform_c}, {"pairs", pairs.size()}};
    out.push_back(guarded("uniform_domain_lemma/alpha=" + fmt(alpha), inputs, [&] {
      const auto rep = uniform_integral_check(disk, family, alpha, cfg.uniform_c, pairs);
      auto c = bound_record("", "max over pairs of int_gamma d^(alpha-1) / ((2c/alpha) |x-y|^alpha) <= 1", inputs,
                            rep.worst_ratio, 1.0, 0.0, true);
      c.measurements = to_json(rep);
      c.witness = {{"x", rep.witness_x}, {"y", rep.witness_y}};
      if (rep.divergence_flags > 0) c.lhs = INFINITY;
      return c;
    }));
  }
  return out;
}

std::vector<Point> polar_grid() {
  std::vector<Point> pts{{0.0, 0.0}};
  for (int k = 1; k <= 24; ++k) {
    const double r = 1.0 - std::ldexp(1.0, -k);
    for (int j = 0; j < 64; ++j) {
      const double t = 2.0 * M_PI * j / 64.0;
      pts.push_back({r * std::cos(t), r * std::sin(t)});
    }
  }
  return pts;
}

Records hardy_littlewood_disk(const SuiteConfig& cfg, std::uint64_t seed) {
  Records out;
  const auto disk = DiscretizedDomain::unit_disk(cfg.disk_spacing);
  const auto grid = polar_grid();
  for (double alpha : cfg.hl_alphas) {
    Rng rng(derive_seed(seed, fmt(alpha)));
    PairSamplingOptions po;
    po.count = cfg.hl_pairs;
    auto pairs = sample_pairs(disk, rng, po);
    // pairs approaching the branch point z = 1 along the radius
    for (int k = 1; k <= 30; ++k)
      pairs.push_back({{1.0 - std::ldexp(1.0, -k), 0.0}, {1.0 - std::ldexp(1.0, -k - 1), 0.0}});
    const std::string base = "hardy_littlewood_disk/alpha=" + fmt(alpha);
    const nlohmann::json inputs = {{"alpha", alpha}, {"pairs", pairs.size()}};
    try {
      HardyLittlewoodInputs in;
      in.f = std::make_shared<ClosedFormMap>(ClosedFormMap::power_branch(alpha));
      in.domain = &disk;
      in.c = cfg.uniform_c;
      in.alpha = alpha;
      in.grid = grid;
      in.pairs = pairs;
      auto checks = verify_hardy_littlewood_uniform(in, cfg.tolerances);
      checks[0].name = base + "/upper";
      checks[1].name = base + "/lower";
      out.insert(out.end(), checks.begin(), checks.end());
    } catch (const std::exception& e) {
      out.push_back(errored_record(base, inputs, e.what()));
    }
  }
  return out;
}

Records regularity_constants(const SuiteConfig& cfg, std::uint64_t seed) {
  Records out;
  struct Case {
    std::size_t n, m;
    int degree;
  };
  for (const Case cs : {Case{1, 1, 3}, Case{1, 2, 3}, Case{2, 3, 2}}) {
    const auto domain = ball_of(cs.n, cfg);
    Rng rng(derive_seed(seed, dims(cs.n, cs.m)));
    const auto centers = sample_points(domain, rng, cfg.regularity_centers, 0.05);
    for (std::size_t i = 0; i < cfg.regularity_maps; ++i) {
      const std::string name = "regularity_constants/" + dims(cs.n, cs.m) + "/map=" + std::to_string(i);
      const auto f = normalized_random(cs.n, cs.m, cs.degree, rng, name);
      const nlohmann::json inputs = {{"map", f->label()}, {"domain", domain.describe()}, {"degree", cs.degree},
                                     {"centers", centers.size()}};
      out.push_back(guarded(name, inputs, [&] {
        const auto rep = bounded_regularity_check(f, domain, centers);
        auto c = bound_record("", rep.p == 1.0 ? "K(p=1, A={0}, w=d) <= 1" : "K(p=2, A={0}, w=d) <= 1", inputs,
                              rep.estimate.infinite ? INFINITY : rep.estimate.K, 1.0, rep.tolerance, true);
        c.inputs["p"] = rep.p;
        c.measurements = to_json(rep);
        c.witness = {{"x", rep.estimate.witness_x}, {"r", rep.estimate.witness_radius}};
        c.witness["map"] = std::static_pointer_cast<const PolynomialMap>(f)->to_json();
        return c;
      }));
    }
  }
  return out;
}

Records frechet_bridge(const SuiteConfig& cfg, std::uint64_t seed) {
  Records out;
  struct Case {
    std::size_t n, m;
    int degree;
  };
  for (const Case cs : {Case{1, 1, 4}, Case{1, 2, 3}, Case{2, 3, 3}}) {
    const std::string name = "frechet_bridge/" + dims(cs.n, cs.m);
    const nlohmann::json inputs = {{"degree", cs.degree}, {"points", cfg.bridge_points}};
    out.push_back(guarded(name, inputs, [&] {
      Rng rng(derive_seed(seed, dims(cs.n, cs.m)));
      const auto f = normalized_random(cs.n, cs.m, cs.degree, rng, name);
      double worst = 0.0, smallest = INFINITY;
      nlohmann::json worst_report;
      for (std::size_t i = 0; i < cfg.bridge_points; ++i) {
        const auto rep = differential_norm_dilatation_bridge(f, to_real(random_ball_point(cs.n, rng, 0.9)));
        smallest = std::min(smallest, rep.smallest_radius);
        if (rep.difference >= worst) {
          worst = rep.difference;
          worst_report = to_json(rep);
        }
      }
      auto c = bound_record("", "max | ||df(z)|| - d*f(z) | <= 1e-3", inputs, worst, 1e-3, 0.0, false);
      c.measurements = {{"smallest_radius", smallest}, {"worst", worst_report}};
      c.witness = {{"map", std::static_pointer_cast<const PolynomialMap>(f)->to_json()}};
      return c;
    }));
  }
  return out;
}

Records dyakonov_corollaries(const SuiteConfig& cfg, std::uint64_t seed) {
  Records out;
  const auto run = [&](const std::string& name, const AnalyticMapPtr& f, const DiscretizedDomain& domain,
                       double alpha, Rng& rng) {
    const nlohmann::json inputs = {{"map", f->label()}, {"alpha", alpha}};
    out.push_back(guarded(name, inputs, [&] {
      PairSamplingOptions po;
      po.count = cfg.pairs;
      const auto pairs = sample_pairs(domain, rng, po);
      const auto centers = sample_points(domain, rng, cfg.centers);
      DyakonovInputs in;
      in.f = f;
      in.domain = &domain;
      in.c = cfg.uniform_c;
      in.alpha = alpha;
      in.pairs = pairs;
      in.centers = centers;
      in.local.per_center = cfg.local_per_center;
      in.local.seed = rng.next_seed();
      return f->target_dim() == 1 ? verify_dyakonov_dim1(in, cfg.tolerances) : verify_dyakonov_higher(in, cfg.tolerances);
    }));
  };
  const auto disk = DiscretizedDomain::unit_disk(cfg.disk_spacing);
  const auto ball = DiscretizedDomain::unit_ball(4, cfg.ball_spacing);
  const auto half_affine = std::make_shared<PolynomialMap>(
      PolynomialMap(1, {{{{0}, 0.5}, {{1}, 0.5}}}, "(1+z)/2"));
  const auto pair_map = std::make_shared<PolynomialMap>(PolynomialMap(1, {{{{1}, 0.5}}, {{{2}, 0.5}}}, "(z/2, z^2/2)"));
  const auto constant = std::make_shared<PolynomialMap>(PolynomialMap::constant(1, {{0.3, 0.4}}).with_label("constant"));
  for (double alpha : cfg.dyakonov_alphas) {
    const std::string a = "/alpha=" + fmt(alpha);
    Rng rng(derive_seed(seed, fmt(alpha)));
    run("dyakonov_corollaries/scalar" + a + "/constant", constant, disk, alpha, rng);
    run("dyakonov_corollaries/scalar" + a + "/half_affine", half_affine, disk, alpha, rng);
    run("dyakonov_corollaries/vector" + a + "/pair", pair_map, disk, alpha, rng);
    struct Case {
      std::string kind;
      std::size_t n, m;
      int degree;
      const DiscretizedDomain* domain;
    };
    for (const Case& cs : {Case{"scalar", 1, 1, 4, &disk}, Case{"vector", 1, 2, 3, &disk},
                           Case{"vector", 2, 3, 2, &ball}})
      for (std::size_t i = 0; i < cfg.maps_per_case; ++i) {
        const std::string name = "dyakonov_corollaries/" + cs.kind + a + "/" + dims(cs.n, cs.m) + "/map=" +
                                 std::to_string(i);
        run(name, normalized_random(cs.n, cs.m, cs.degree, rng, name), *cs.domain, alpha, rng);
      }
  }
  return out;
}

Records triangle_remark(const SuiteConfig& cfg, std::uint64_t seed) {
  Records out;
  Rng rng(seed);
  const auto ball = DiscretizedDomain::unit_ball(4, cfg.ball_spacing);
  PairSamplingOptions po;
  po.count = cfg.triangle_pairs;
  const auto pairs = sample_pairs(ball, rng, po);
  // a discontinuous map given only by a table of random values
  auto table = std::make_shared<std::map<Point, Point>>();
  for (const auto& pr : pairs)
    for (const Point& p : {pr.x, pr.y}) {
      Point v(4);
      for (auto& c : v) c = rng.uniform(-1.5, 1.5);
      table->emplace(p, v);
    }
  SampledMap tabulated;
  tabulated.range_dim = 4;
  tabulated.label = "tabulated random map";
  tabulated.evaluate = [table](const Point& x) {
    const auto it = table->find(x);
    if (it == table->end()) throw InvalidInput("tabulated map: point not in the table");
    return it->second;
  };
  const std::vector<std::pair<std::string, SetDescriptor>> sets = {
      {"origin", OriginSet{}},
      {"sphere", SphereSet{0.5}},
      {"finite", FiniteSet{{{0.1, 0.2, 0.0, 0.3}, {-0.4, 0.0, 0.1, 0.0}, {0.0, 0.9, -0.2, 0.1}}}}};
  for (const auto& [label, A] : sets) {
    for (const SampledMap& f : {tabulated, identity_map(4)}) {
      const std::string name = "triangle_remark/" + label + "/" + (f.label == tabulated.label ? "tabulated" : "identity");
      out.push_back(guarded(name, {{"map", f.label}, {"set", describe(A)}},
                            [&] { return triangle_remark_check(f, A, pairs); }));
    }
  }
  return out;
}

Records lipschitz_from_bloch(const SuiteConfig& cfg, std::uint64_t seed) {
  Records out;
  const auto disk = DiscretizedDomain::unit_disk(cfg.disk_spacing);
  Rng rng(seed);
  PairSamplingOptions po;
  po.count = cfg.pairs;
  const auto pairs = sample_pairs(disk, rng, po);
  const auto points = sample_points(disk, rng, cfg.centers, 1e-3);
  const std::span<const PointPair> condition(pairs.data(), std::min(cfg.certificate_pairs, pairs.size()));
  const double alpha = cfg.main_alpha;
  const std::vector<AnalyticMapPtr> maps = {
      std::make_shared<ClosedFormMap>(ClosedFormMap::power_branch(alpha)),
      normalized_random(1, 1, 4, rng, "normalized quartic")};
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::string name = "lipschitz_from_bloch/" + std::to_string(i) + "/" + maps[i]->label();
    out.push_back(guarded(name, {{"map", maps[i]->label()}}, [&] {
      LipschitzFromBlochInputs in;
      in.f = as_sampled_map(maps[i]);
      in.domain = &disk;
      in.w = WeightField::power(disk, alpha - 1.0);
      in.phi = Majorant::power(alpha);
      in.family = cone_arcs(disk);
      in.M = 2.0 * cfg.uniform_c / alpha;
      in.condition_pairs = condition;
      in.pairs = pairs;
      in.bloch_points = points;
      return verify_lipschitz_from_bloch(in, cfg.tolerances);
    }));
  }
  return out;
}

Records bloch_from_lipschitz(const SuiteConfig& cfg, std::uint64_t seed) {
  Records out;
  const auto disk = DiscretizedDomain::unit_disk(cfg.disk_spacing);
  Rng rng(seed);
  PairSamplingOptions po;
  po.count = cfg.pairs;
  const auto pairs = sample_pairs(disk, rng, po);
  const auto points = sample_points(disk, rng, cfg.centers, 1e-3);
  const auto centers = sample_points(disk, rng, cfg.regularity_centers, 0.05);
  const double alpha = cfg.main_alpha;
  const std::vector<std::pair<std::string, SampledMap>> maps = {
      {"identity", identity_map(2)},
      {"square", as_sampled_map(std::make_shared<PolynomialMap>(PolynomialMap(1, {{{{2}, 1.0}}}, "z^2")))},
      {"power_branch", as_sampled_map(std::make_shared<ClosedFormMap>(ClosedFormMap::power_branch(alpha)))}};
  for (const auto& [label, f] : maps) {
    const std::string name = "bloch_from_lipschitz/" + label;
    out.push_back(guarded(name, {{"map", f.label}}, [&] {
      BlochFromLipschitzInputs in;
      in.f = f;
      in.domain = &disk;
      in.w = WeightField::boundary_distance(disk);
      in.alpha = alpha;
      in.pairs = pairs;
      in.bloch_points = points;
      in.regularity_centers = centers;
      return verify_bloch_from_lipschitz(in, cfg.tolerances);
    }));
  }
  return out;
}

Records main_theorem(const SuiteConfig& cfg, std::uint64_t seed) {
  Records out;
  const auto disk = DiscretizedDomain::unit_disk(cfg.disk_spacing);
  Rng rng(seed);
  PairSamplingOptions po;
  po.count = cfg.pairs;
  const auto pairs = sample_pairs(disk, rng, po);
  const auto centers = sample_points(disk, rng, cfg.centers);
  PairSamplingOptions cp;
  cp.count = cfg.certificate_pairs;
  cp.min_boundary_distance = 8.0 * cfg.disk_spacing;
  const auto cert_pairs = sample_pairs(disk, rng, cp);
  const double alpha = cfg.main_alpha;
  struct Instance {
    std::string label;
    AnalyticMapPtr f;
    SetDescriptor A;
    double p;
  };
  const auto scalar = normalized_random(1, 1, 4, rng, "normalized quartic");
  const auto vector = normalized_random(1, 2, 3, rng, "normalized cubic pair");
  const std::vector<Instance> instances = {{"scalar/p=1/origin", scalar, OriginSet{}, 1.0},
                                           {"scalar/p=2/origin", scalar, OriginSet{}, 2.0},
                                           {"vector/p=2/origin", vector, OriginSet{}, 2.0},
                                           {"vector/p=1/sphere", vector, SphereSet{0.5}, 1.0}};
  for (const auto& inst : instances) {
    const std::string name = "main_theorem/" + inst.label;
    out.push_back(guarded(name, {{"map", inst.f->label()}, {"p", inst.p}}, [&] {
      MainTheoremInputs in;
      in.f = as_sampled_map(inst.f);
      in.domain = &disk;
      in.A = inst.A;
      in.p = inst.p;
      in.alpha = alpha;
      in.w = WeightField::half_boundary_distance(disk);
      in.M_beta = 2.0 * (2.0 * cfg.uniform_c / (alpha / inst.p));
      in.family = cone_arcs(disk);
      in.certificate_pairs = cert_pairs;
      in.pairs = pairs;
      in.centers = centers;
      in.local.per_center = cfg.local_per_center;
      return verify_main_theorem(in, cfg.tolerances);
    }));
  }
  return out;
}

using CheckFn = Records (*)(const SuiteConfig&, std::uint64_t);

struct Entry {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> v = {
        {{"dyakonov_corollaries", "Dyakonov-type corollaries for bounded analytic maps",
          "||f||_Lip(alpha) <= (4c/alpha) || |f| ||_loc, and ||f||_Lip(alpha/2) <= (8c/alpha) || ||f||^2 ||_loc^(1/2)"},
         dyakonov_corollaries},
        {{"frechet_bridge", "upper dilatation equals the norm of the Frechet differential",
          "| ||df(z)|| - d*f(z) | <= 1e-3"},
         frechet_bridge},
        {{"hardy_littlewood_disk", "Hardy-Littlewood theorem on uniform domains",
          "C' <= (2c/alpha) C and C <= C' for (1 - z)^alpha"},
         hardy_littlewood_disk},
        {{"main_theorem", "Lipschitz norm from the local oscillation of d(f, A)^p",
          "||f||_Lip(alpha/p) <= M_beta K ||d(f,A)^p||_loc(alpha)^(1/p)"},
         main_theorem},
        {{"moebius_differential_norm", "norm of the differential of a ball automorphism at the origin",
          "||dphi_a(0)|| = 1 - |a|^2 in dimension 1, sqrt(1 - ||a||^2) otherwise"},
         moebius_differential_norm},
        {{"moebius_involution", "Moebius transforms of the unit ball are involutions",
          "phi_a(phi_a(z)) = z and phi_a(0) = a"},
         moebius_involution},
        {{"lipschitz_from_bloch", "Lipschitz norm bounded by a Bloch norm under an integral condition",
          "||f||_Lip(phi) <= M ||f||_Bloch(w)"},
         lipschitz_from_bloch},
        {{"bloch_from_lipschitz", "Bloch norm bounded by a Lipschitz norm for regularly oscillating maps",
          "||f||_Bloch(phi'(w)) <= A K ||f||_Lip(phi)"},
         bloch_from_lipschitz},
        {{"quasi_hyperbolic_disk", "quasi-hyperbolic distance along a radius of the disk",
          "k(0, r) = log(1/(1 - r))"},
         quasi_hyperbolic_disk},
        {{"regularity_constants", "bounded analytic maps are 1-regular (scalar) or 2-regular (vector)",
          "K <= 1 with A = {0}, w = d"},
         regularity_constants},
        {{"schwarz_pick_battery", "Schwarz-Pick lemma for maps into the unit ball",
          "||df(0)|| <= 1 - |f(0)|^2 (scalar), sqrt(1 - ||f(0)||^2) otherwise"},
         schwarz_pick_battery},
        {{"triangle_remark", "distance to a set is 1-Lipschitz",
          "|d(f(x),A) - d(f(y),A)| <= d(f(x),f(y))"},
         triangle_remark},
        {{"uniform_domain_lemma", "uniform domains satisfy the curve-integral condition",
          "int_gamma d^(alpha-1) <= (2c/alpha) |x-y|^alpha"},
         uniform_domain_lemma},
    };
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.info.name < b.info.name; });
    return v;
  }();
  return entries;
}

const Entry& find_entry(const std::string& name) {
  for (const auto& e : registry())
    if (e.info.name == name) return e;
  throw UsageError("unknown check '" + name + "'");
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

bool VerificationReport::pass() const { return failed() == 0; }

std::size_t VerificationReport::failed() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass(); }));
}

std::size_t VerificationReport::errored() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.errored; }));
}

std::vector<TheoremCheck> run_check(const std::string& name, const SuiteConfig& config) {
  const auto& entry = find_entry(name);
  try {
    return entry.fn(config, derive_seed(config.seed, name));
  } catch (const std::exception& e) {
    return {errored_record(name, nlohmann::json::object(), e.what())};
  }
}

VerificationReport run_suite(const SuiteConfig& config) {
  for (const auto& name : config.checks) find_entry(name);
  const std::size_t n = config.checks.size();
  std::vector<Records> results(n);
  std::vector<double> seconds(n, 0.0);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      const auto t0 = std::chrono::steady_clock::now();
      results[i] = run_check(config.checks[i], config);
      seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  std::size_t jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(n, 1));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  VerificationReport report;
  report.config = config.to_json();
  report.config_digest = hlab::config_digest(config);
  for (std::size_t i = 0; i < n; ++i) {
    report.records.insert(report.records.end(), results[i].begin(), results[i].end());
    report.timings.push_back({config.checks[i], seconds[i]});
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const TheoremCheck& a, const TheoremCheck& b) { return a.name < b.name; });
  std::sort(report.timings.begin(), report.timings.end(),
            [](const CheckTiming& a, const CheckTiming& b) { return a.check < b.check; });
  return report;
}

}  // namespace hlab
