#include <doctest.h>

#include <cmath>
#include <complex>

#include "hlab/errors.hpp"
#include "hlab/lipschitz_estimators.hpp"

using namespace hlab;

namespace {

std::vector<PointPair> interval_pairs(std::size_t n, Rng& rng) {
  std::vector<PointPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform(1e-9, 1.0);
    // a quarter of the pairs have one end very close to 0
    const double y = i % 4 == 0 ? x * rng.uniform(0.0, 1e-6) + 1e-12 : rng.uniform(1e-9, 1.0);
    pairs.push_back({{x}, {y}});
  }
  return pairs;
}

SampledMap square_map() {
  return {[](const Point& p) {
            const std::complex<double> z(p[0], p[1]);
            const auto w = z * z;
            return Point{w.real(), w.imag()};
          },
          2, NormKind::euclidean, "z^2"};
}

SampledMap power_branch_map(double alpha) {
  return {[alpha](const Point& p) {
            const auto w = std::exp(alpha * std::log(1.0 - std::complex<double>(p[0], p[1])));
            return Point{w.real(), w.imag()};
          },
          2, NormKind::euclidean, "(1-z)^a"};
}

}  // namespace

TEST_CASE("global seminorm on the interval") {
  Rng rng(1);
  const auto pairs = interval_pairs(10000, rng);
  CHECK(holder_seminorm(identity_map(1), pairs, Majorant::power(1.0)).value == doctest::Approx(1.0));
  CHECK(holder_seminorm(constant_map({0.3}), pairs, Majorant::power(0.5)).value == 0.0);

  // sup |√x − √y| / |x − y|^{1/2} = 1, approached as y → 0
  const auto sq = scalar_map("sqrt", [](const Point& p) { return std::sqrt(p[0]); });
  const auto est = holder_seminorm(sq, pairs, Majorant::power(0.5));
  CHECK(est.value <= 1.0 + 1e-12);
  CHECK(est.value >= 0.98);
  CHECK(est.lower_bound);
  CHECK(est.sample_count == pairs.size());
}

TEST_CASE("scaled identity gives |lambda| exactly") {
  Rng rng(2);
  const auto pairs = interval_pairs(100, rng);
  for (double lambda : {-2.5, 0.0, 0.75})
    CHECK(holder_seminorm(scaled_identity(1, lambda), pairs, Majorant::power(1.0)).value ==
          doctest::Approx(std::abs(lambda)).epsilon(1e-12));
}

TEST_CASE("seminorm is monotone in the pair set") {
  Rng rng(3);
  auto pairs = interval_pairs(200, rng);
  const auto f = scalar_map("x^0.3", [](const Point& p) { return std::pow(p[0], 0.3); });
  double last = 0.0;
  for (std::size_t n = 10; n <= pairs.size(); n += 10) {
    const double v = holder_seminorm(f, std::span(pairs).first(n), Majorant::power(0.5)).value;
    CHECK(v >= last);
    last = v;
  }
}

TEST_CASE("degenerate majorant") {
  const auto zero = Majorant::custom("zero", [](double) { return 0.0; }, [](double) { return 0.0; });
  const std::vector<PointPair> pairs{{{0.1}, {0.2}}};
  CHECK_THROWS_AS(holder_seminorm(identity_map(1), pairs, zero), MajorantDegeneracyError);
}

TEST_CASE("local seminorm") {
  const auto disk = DiscretizedDomain::unit_disk();
  const auto w = WeightField::half_boundary_distance(disk);
  Rng rng(4);
  const auto centers = sample_points(disk, rng, 100);
  const auto est = local_holder_seminorm(identity_map(2), w, disk, centers, Majorant::power(1.0));
  CHECK(est.value == doctest::Approx(1.0).epsilon(0.01));
  CHECK(local_holder_seminorm(constant_map({1.0, 2.0}), w, disk, centers, Majorant::power(0.5)).value == 0.0);

  // subset property on matched pairs
  const auto pairs = sample_pairs(disk, rng, {2000, 0.05, 0.0});
  const auto f = power_branch_map(0.5);
  const auto phi = Majorant::power(0.5);
  const double local = local_holder_seminorm(f, w, pairs, phi).value;
  const double global = holder_seminorm(f, pairs, phi).value;
  CHECK(local <= global);
  CHECK(local > 0.0);
}

TEST_CASE("upper dilatation") {
  const auto id = upper_dilatation(identity_map(2), {0.2, -0.1});
  for (double q : id.quotients) CHECK(q == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id.value == doctest::Approx(1.0));

  // |z²| / |z| = |z| at the origin
  const auto at0 = upper_dilatation(square_map(), {0.0, 0.0});
  for (std::size_t i = 0; i < at0.radii.size(); ++i)
    CHECK(at0.quotients[i] == doctest::Approx(at0.radii[i]).epsilon(1e-9));
  CHECK(at0.value < 1e-3);

  // |f'(1/2)| = 1
  CHECK(upper_dilatation(square_map(), {0.5, 0.0}).value == doctest::Approx(1.0).epsilon(1e-3));

  DilatationOptions tight;
  tight.admissible_radius = 1e-5;
  CHECK_THROWS_AS(upper_dilatation(identity_map(2), {0.0, 0.0}, tight), InvalidInput);

  DilatationOptions iso;
  iso.isolated_point = true;
  CHECK(upper_dilatation(identity_map(2), {0.0, 0.0}, iso).value == 0.0);
}

TEST_CASE("sphere search finds the maximum of a linear functional") {
  for (std::size_t dim : {1u, 2u, 3u, 6u}) {
    Point c(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) c[i] = 0.3 + 0.1 * static_cast<double>(i);
    const auto res = maximize_on_sphere(
        [&](const Point& u) {
          double s = 0.0;
          for (std::size_t i = 0; i < dim; ++i) s += c[i] * u[i];
          return s;
        },
        dim);
    CHECK(res.value == doctest::Approx(norm(c)).epsilon(1e-9));
  }
}

TEST_CASE("Bloch norm") {
  const auto disk = DiscretizedDomain::unit_disk();
  Rng rng(5);
  const auto pts = sample_points(disk, rng, 50);
  CHECK(bloch_norm(identity_map(2), WeightField::constant(1.0), disk, pts).value == doctest::Approx(1.0));
  CHECK(bloch_norm(constant_map({0.5, 0.5}), WeightField::constant(1.0), disk, pts).value == 0.0);

  // |f'(z)| = α|1−z|^{α−1} and 1 − |z| ≤ |1 − z| give d*f / d^{α−1} ≤ α, equality on the radius toward 1
  for (double alpha : {0.25, 0.5, 0.75}) {
    const auto w = WeightField::power(disk, alpha - 1.0);
    std::vector<Point> grid;
    const auto& g = disk.grid();
    for (std::size_t i = 0; i < g.size(); i += 7) grid.push_back(g.node_point(i));
    for (double r : {0.5, 0.8, 0.9}) grid.push_back({r, 0.0});
    const auto est = bloch_norm(power_branch_map(alpha), w, disk, grid);
    CHECK(est.value <= alpha * 1.01);
    CHECK(est.value >= alpha * 0.95);
  }
}

TEST_CASE("distance to sets") {
  CHECK(distance_to_set({0.7, 0.0}, OriginSet{}) == doctest::Approx(0.7));
  CHECK(distance_to_set({0.0, 0.6}, SphereSet{1.0}) == doctest::Approx(0.4));
  CHECK(distance_to_set({1.0, 0.0}, FiniteSet{{{1.0, 0.0}, {0.0, 1.0}}}) == 0.0);
  CHECK(distance_to_set({0.0, 0.0}, FiniteSet{{{1.0, 0.0}, {0.0, 1.0}}}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(distance_to_set({0.0}, FiniteSet{}), InvalidInput);
}

TEST_CASE("modulus power functions") {
  const auto g1 = modulus_power_function(identity_map(2), OriginSet{}, 1.0);
  CHECK(g1({0.3, 0.4})[0] == doctest::Approx(0.5));
  const auto g2 = modulus_power_function(constant_map({2.0, 0.0}), OriginSet{}, 2.0);
  CHECK(g2({0.1, 0.1})[0] == doctest::Approx(4.0));
  const auto g3 = modulus_power_function(square_map(), OriginSet{}, 2.0);
  CHECK(g3({0.3, 0.4})[0] == doctest::Approx(std::pow(0.5, 4)));
}

TEST_CASE("reverse triangle inequality for set distances") {
  Rng rng(6);
  const auto disk = DiscretizedDomain::unit_disk();
  const auto pairs = sample_pairs(disk, rng, {1000, 0.05, 0.0});
  // an arbitrary discontinuous map
  const SampledMap f{[](const Point& p) {
                       return Point{std::floor(7 * p[0]) * 0.3, std::sin(40 * p[1]), p[0] * p[1]};
                     },
                     3, NormKind::euclidean, "tabulated"};
  const SetDescriptor sets[] = {OriginSet{}, SphereSet{0.8}, FiniteSet{{{1, 0, 0}, {0, -1, 0.5}}}};
  for (const auto& A : sets)
    for (const auto& pr : pairs) {
      const Point fx = f(pr.x), fy = f(pr.y);
      CHECK(std::abs(distance_to_set(fx, A) - distance_to_set(fy, A)) <= f.range_distance(fx, fy) + 1e-12);
    }
}

TEST_CASE("regular oscillation constants") {
  const auto disk = DiscretizedDomain::unit_disk();
  const auto w = WeightField::boundary_distance(disk);
  Rng rng(7);
  const auto centers = sample_points(disk, rng, 10, 0.05);
  const auto id = regular_oscillation_constant(identity_map(2), w, disk, centers);
  CHECK(id.K == doctest::Approx(1.0).epsilon(1e-8));
  CHECK_FALSE(id.infinite);
  CHECK(regular_oscillation_constant(constant_map({0.1, 0.0}), w, disk, centers).K == 0.0);

  const auto sq = regular_oscillation_constant(square_map(), w, disk, centers);
  CHECK(sq.K <= 1.0 + 1e-3);

  OscillationOptions bad;
  bad.radius_fractions = {1.0};
  CHECK_THROWS_AS(regular_oscillation_constant(identity_map(2), w, disk, centers, bad), InvalidInput);
}

TEST_CASE("infinite K flag") {
  const auto disk = DiscretizedDomain::unit_disk();
  // the map moves but its distance to the unit circle stays 0
  const auto circle = SampledMap{[](const Point& p) {
                                   const double t = std::atan2(p[1], p[0] + 2.0);
                                   return Point{std::cos(t), std::sin(t)};
                                 },
                                 2, NormKind::euclidean, "onto circle"};
  Rng rng(8);
  const auto centers = sample_points(disk, rng, 3, 0.2);
  const auto est = p_regular_constant(circle, WeightField::boundary_distance(disk), disk, SphereSet{1.0},
                                      1.0, centers);
  CHECK(est.infinite);
}
