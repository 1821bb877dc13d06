#include <doctest.h>

#include <cmath>
#include <memory>

#include "hlab/errors.hpp"
#include "hlab/theorem_harness.hpp"

using namespace hlab;

namespace {

constexpr double kDiskUniformity = 2.05;

struct DiskFixture {
  DiscretizedDomain disk = DiscretizedDomain::unit_disk(1.0 / 32);
  Rng rng{51};
  std::vector<PointPair> pairs;
  std::vector<Point> points;
  DiskFixture() {
    PairSamplingOptions po;
    po.count = 300;
    po.min_boundary_distance = 1e-3;
    pairs = sample_pairs(disk, rng, po);
    points = sample_points(disk, rng, 60, 1e-3);
  }
};

AnalyticMapPtr normalized(std::size_t n, std::size_t m, int degree, std::uint64_t seed) {
  Rng rng(seed);
  return std::make_shared<PolynomialMap>(normalize_on_ball(random_polynomial(n, m, degree, rng)).map);
}

}  // namespace

TEST_CASE("bias policy") {
  TheoremCheck c;
  c.name = "probe";
  c.constant = 2.0;
  c.rhs_measured = 3.0;
  c.bias = {true, true, 0.0, ""};
  CHECK_FALSE(bias_policy_ok(c.bias));
  CHECK_THROWS_AS(finalize(c), InvalidInput);

  c.bias.slack = 0.05;
  finalize(c);
  CHECK(c.rhs == doctest::Approx(6.3));

  c.bias = {true, true, 0.0, "exact right-hand side"};
  finalize(c);
  CHECK(c.rhs == 6.0);

  c.bias = {true, false, 0.0, ""};
  CHECK(bias_policy_ok(c.bias));

  c.lhs = 6.0 + 1e-10;
  c.tolerance = 1e-9;
  CHECK(c.pass());
  c.errored = true;
  CHECK_FALSE(c.pass());
  CHECK(to_json(c).contains("error"));
}

TEST_CASE("corollary constants") {
  CHECK(corollary_constant(2.0, 0.5, 1.0) == doctest::Approx(16.0));
  CHECK(corollary_constant(2.0, 0.5, 2.0) == doctest::Approx(32.0));
  CHECK(corollary_constant(1.0, 0.25, 1.0) == doctest::Approx(16.0));
}

TEST_CASE("Lipschitz norm from the Bloch norm") {
  DiskFixture fx;
  const double alpha = 0.5;
  LipschitzFromBlochInputs in;
  in.f = as_sampled_map(std::make_shared<ClosedFormMap>(ClosedFormMap::power_branch(alpha)));
  in.domain = &fx.disk;
  in.w = WeightField::power(fx.disk, alpha - 1.0);
  in.phi = Majorant::power(alpha);
  in.family = cone_arcs(fx.disk);
  in.M = 2.0 * kDiskUniformity / alpha;
  const std::span<const PointPair> cond(fx.pairs.data(), 60);
  in.condition_pairs = cond;
  in.pairs = fx.pairs;
  in.bloch_points = fx.points;
  const auto c = verify_lipschitz_from_bloch(in);
  CHECK(c.name == "lipschitz_from_bloch");
  CHECK(c.pass());
  CHECK(c.lhs > 0.0);
  CHECK(c.bias.slack > 0.0);

  in.M = 0.1;
  CHECK_THROWS_AS(verify_lipschitz_from_bloch(in), PreconditionError);

  // t^1.5 has an increasing derivative, so it is not a majorant
  in.M = 2.0 * kDiskUniformity / alpha;
  in.phi = Majorant::power(1.5);
  CHECK_THROWS_AS(verify_lipschitz_from_bloch(in), PreconditionError);
}

TEST_CASE("Bloch norm from the Lipschitz norm") {
  DiskFixture fx;
  BlochFromLipschitzInputs in;
  in.f = identity_map(2);
  in.domain = &fx.disk;
  in.w = WeightField::boundary_distance(fx.disk);
  in.alpha = 0.5;
  in.pairs = fx.pairs;
  in.bloch_points = fx.points;
  const std::span<const Point> centers(fx.points.data(), 10);
  in.regularity_centers = centers;
  const auto c = verify_bloch_from_lipschitz(in);
  CHECK(c.pass());
  // identity: K = 1, the Bloch side is max d^{1/2}/α ≤ 2 and the Hölder side ≤ √2
  CHECK(c.measurements["K"]["K"].get<double>() == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(c.lhs <= 2.0 + 1e-9);

  // constant map: zero dilatation everywhere, so K = 0 and both sides vanish
  in.f = constant_map({0.5, 0.5});
  const auto z = verify_bloch_from_lipschitz(in);
  CHECK(z.lhs == 0.0);
  CHECK(z.pass());
}

TEST_CASE("Hardy-Littlewood on the disk") {
  DiskFixture fx;
  HardyLittlewoodInputs in;
  in.f = std::make_shared<ClosedFormMap>(ClosedFormMap::power_branch(0.5));
  in.domain = &fx.disk;
  in.c = kDiskUniformity;
  in.alpha = 0.5;
  in.grid = fx.points;
  in.pairs = fx.pairs;
  const auto checks = verify_hardy_littlewood_uniform(in);
  REQUIRE(checks.size() == 2);
  CHECK(checks[0].name == "hardy_littlewood_upper");
  CHECK(checks[0].pass());
  CHECK(checks[1].pass());
  CHECK_FALSE(checks[0].bias.waiver.empty());
}

TEST_CASE("main theorem with p = 2 on a scalar map") {
  DiskFixture fx;
  const double alpha = 0.5, p = 2.0;
  MainTheoremInputs in;
  in.f = as_sampled_map(normalized(1, 1, 3, 52));
  in.domain = &fx.disk;
  in.A = OriginSet{};
  in.p = p;
  in.alpha = alpha;
  in.w = WeightField::half_boundary_distance(fx.disk);
  in.M_beta = 2.0 * (2.0 * kDiskUniformity / (alpha / p));
  in.family = cone_arcs(fx.disk);
  const std::span<const PointPair> cert(fx.pairs.data(), 20);
  in.certificate_pairs = cert;
  in.pairs = fx.pairs;
  const std::span<const Point> centers(fx.points.data(), 20);
  in.centers = centers;
  const auto c = verify_main_theorem(in);
  CHECK(c.pass());
  CHECK(c.measurements["certificate"]["pass"].get<bool>());

  in.M_beta = 1e-3;
  CHECK_THROWS_AS(verify_main_theorem(in), PreconditionError);
}

TEST_CASE("Dyakonov corollaries") {
  DiskFixture fx;
  DyakonovInputs in;
  in.domain = &fx.disk;
  in.c = kDiskUniformity;
  in.alpha = 0.5;
  in.pairs = fx.pairs;
  const std::span<const Point> centers(fx.points.data(), 20);
  in.centers = centers;

  in.f = normalized(1, 1, 4, 53);
  const auto scalar = verify_dyakonov_dim1(in);
  CHECK(scalar.name == "dyakonov_scalar");
  CHECK(scalar.constant == doctest::Approx(4.0 * kDiskUniformity / 0.5));
  CHECK(scalar.pass());
  CHECK_THROWS_AS(verify_dyakonov_higher(in), InvalidInput);

  in.f = normalized(1, 2, 3, 54);
  const auto vec = verify_dyakonov_higher(in);
  CHECK(vec.constant == doctest::Approx(8.0 * kDiskUniformity / 0.5));
  CHECK(vec.pass());

  in.f = std::make_shared<PolynomialMap>(PolynomialMap::identity(1).scaled(2.0));
  CHECK_THROWS_AS(verify_dyakonov_dim1(in), PreconditionError);
}

TEST_CASE("triangle remark") {
  DiskFixture fx;
  const auto f = as_sampled_map(normalized(1, 2, 3, 55));
  for (const SetDescriptor& A : std::vector<SetDescriptor>{OriginSet{}, SphereSet{0.5},
                                                           FiniteSet{{{0.1, 0.2, 0.0, 0.3}, {-0.4, 0.0, 0.1, 0.0}}}}) {
    const auto c = triangle_remark_check(f, A, fx.pairs);
    CHECK(c.pass());
    CHECK(c.lhs <= 1e-12);
  }
}
