#include "hlab/lipschitz_estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hlab/errors.hpp"
#include "hlab/random.hpp"

namespace hlab {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// K above 1e12 is rounding noise on a zero oscillation
constexpr double kInfiniteK_inverse = 1e-12;

Point random_unit(Rng& rng, std::size_t dim) {
  for (;;) {
    Point u(dim);
    for (auto& c : u) c = rng.normal();
    const double n = norm(u);
    if (n > 1e-12) return scale(u, 1.0 / n);
  }
}

Point normalized(const Point& u) {
  const double n = norm(u);
  return n > 0.0 ? scale(u, 1.0 / n) : u;
}

Point angle_direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

double golden_max(const std::function<double(double)>& g, double a, double b, double& best_t) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - r * (b - a), d = a + r * (b - a);
  double gc = g(c), gd = g(d);
  for (int it = 0; it < 60 && b - a > 1e-12; ++it) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - r * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + r * (b - a);
      gd = g(d);
    }
  }
  if (gc >= gd) {
    best_t = c;
    return gc;
  }
  best_t = d;
  return gd;
}

// Pattern search along projected coordinate directions.
double sphere_climb(const std::function<double(const Point&)>& objective, Point& u, double value) {
  const std::size_t dim = u.size();
  double step = 0.25;
  std::size_t evals = 0;
  while (step > 1e-9 && evals < 20000) {
    bool improved = false;
    for (std::size_t k = 0; k < dim; ++k) {
      for (double sign : {1.0, -1.0}) {
        Point cand = u;
        cand[k] += sign * step;
        cand = normalized(cand);
        const double v = objective(cand);
        ++evals;
        if (v > value) {
          value = v;
          u = std::move(cand);
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return value;
}

Point point_in_ball(Rng& rng, const Point& x, double radius, bool shell) {
  const Point u = random_unit(rng, x.size());
  // uniform(0,1) lies in [0,1), so both radii stay strictly below `radius`.
  const double t = shell ? 1.0 - 0.1 * (1.0 - rng.uniform())
                         : std::pow(rng.uniform(), 1.0 / static_cast<double>(x.size()));
  return add(x, scale(u, radius * std::min(t, 1.0 - 1e-12)));
}

double quotient_denominator(const Majorant& phi, double t) {
  const double den = phi(t);
  if (!std::isfinite(den)) throw EvaluationError("majorant is not finite at a sampled distance");
  if (den <= 0.0) throw MajorantDegeneracyError("majorant vanishes at a positive distance");
  return den;
}

void consider(SeminormEstimate& est, const SampledMap& f, const Majorant& phi, const Point& x,
              const Point& fx, const Point& y, NormKind source_norm) {
  const double t = distance(x, y, source_norm);
  if (t == 0.0) return;
  const double q = f.range_distance(fx, f(y)) / quotient_denominator(phi, t);
  ++est.sample_count;
  if (q > est.value || est.witness_x.empty()) {
    est.value = std::max(est.value, q);
    est.witness_x = x;
    est.witness_y = y;
  }
}

// sup over y ∈ B(x, r) ∩ D of osc(y); spheres of several radii plus interior samples.
double ball_oscillation(const std::function<double(const Point&)>& osc, const Point& x, double r,
                        const DiscretizedDomain& domain, const OscillationOptions& opt, Rng& rng,
                        std::size_t& evals) {
  double best = 0.0;
  for (double s : opt.shell_fractions) {
    // radius strictly inside the open ball
    const double rho = r * std::min(s, 1.0 - 1e-9);
    SphereSearchOptions so = opt.sphere;
    so.seed = rng.next_seed();
    auto objective = [&](const Point& u) {
      const Point y = add(x, scale(u, rho));
      ++evals;
      if (!domain.contains(y)) return kNegInf;
      return osc(y);
    };
    best = std::max(best, maximize_on_sphere(objective, x.size(), so).value);
  }
  for (std::size_t i = 0; i < opt.interior_samples; ++i) {
    const Point y = point_in_ball(rng, x, r, false);
    if (!domain.contains(y)) continue;
    ++evals;
    best = std::max(best, osc(y));
  }
  return best;
}

using OscillationFactory =
    std::function<std::function<double(const Point&)>(const Point& x)>;

RegularityEstimate oscillation_constant(const SampledMap& f, const WeightField& w,
                                        const DiscretizedDomain& domain,
                                        std::span<const Point> centers,
                                        const OscillationOptions& opt,
                                        const OscillationFactory& make_osc) {
  for (double s : opt.radius_fractions)
    if (!(s > 0.0 && s < 1.0)) throw InvalidInput("radius fractions must lie in (0, 1)");
  RegularityEstimate est;
  Rng rng(opt.seed);
  for (const Point& x : centers) {
    if (!domain.contains(x)) throw InvalidInput("oscillation constant: center outside the domain");
    const double wx = w(x);
    if (!(wx > 0.0) || !std::isfinite(wx)) throw EvaluationError("weight is not positive and finite");
    DilatationOptions dopt = opt.dilatation;
    dopt.admissible_radius = std::min(dopt.admissible_radius, domain.boundary_distance(x));
    const double dil = upper_dilatation(f, x, dopt).value;
    const auto osc = make_osc(x);
    for (double frac : opt.radius_fractions) {
      const double r = frac * wx;
      const double o = ball_oscillation(osc, x, r, domain, opt, rng, est.sample_count);
      double k = 0.0;
      if (dil > 1e-14 && o <= kInfiniteK_inverse * dil * r) {
        est.infinite = true;
        k = std::numeric_limits<double>::infinity();
      } else if (o > 0.0) {
        k = dil * r / o;
      }
      if (k > est.K || est.witness_x.empty()) {
        est.K = std::max(est.K, k);
        est.witness_x = x;
        est.witness_radius = r;
        est.witness_dilatation = dil;
        est.witness_oscillation = o;
      }
    }
  }
  return est;
}

}  // namespace

Point SampledMap::operator()(const Point& x) const {
  Point y = evaluate(x);
  for (double c : y)
    if (!std::isfinite(c)) throw EvaluationError("map '" + label + "' returned a non-finite value");
  return y;
}

SampledMap identity_map(std::size_t dim) {
  return {[](const Point& x) { return x; }, dim, NormKind::euclidean, "identity"};
}

SampledMap constant_map(Point value) {
  const std::size_t n = value.size();
  return {[value = std::move(value)](const Point&) { return value; }, n, NormKind::euclidean,
          "constant"};
}

SampledMap scaled_identity(std::size_t dim, double lambda) {
  return {[lambda](const Point& x) { return scale(x, lambda); }, dim, NormKind::euclidean,
          "scaled identity " + std::to_string(lambda)};
}

SampledMap scalar_map(std::string label, std::function<double(const Point&)> g) {
  return {[g = std::move(g)](const Point& x) { return Point{g(x)}; }, 1, NormKind::euclidean,
          std::move(label)};
}

SphereSearchResult maximize_on_sphere(const std::function<double(const Point&)>& objective,
                                      std::size_t dim, const SphereSearchOptions& options) {
  if (dim == 0) throw InvalidInput("sphere search needs dimension ≥ 1");
  SphereSearchResult best;
  if (dim == 1) {
    for (double s : {1.0, -1.0}) {
      const double v = objective(Point{s});
      if (v > best.value || best.direction.empty()) {
        best.value = v;
        best.direction = {s};
      }
    }
    return best;
  }
  const std::size_t n = std::max<std::size_t>(options.directions, 4);
  std::vector<std::pair<double, Point>> starts;
  starts.reserve(n);
  if (dim == 2) {
    for (std::size_t i = 0; i < n; ++i) {
      Point u = angle_direction(2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n));
      starts.emplace_back(objective(u), std::move(u));
    }
  } else {
    Rng rng(options.seed);
    for (std::size_t i = 0; i < n; ++i) {
      Point u = random_unit(rng, dim);
      starts.emplace_back(objective(u), std::move(u));
    }
  }
  const std::size_t k = std::min(options.refine ? options.refine_starts : 0, starts.size());
  std::partial_sort(starts.begin(), starts.begin() + std::max<std::size_t>(k, 1), starts.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first; });
  best.value = starts.front().first;
  best.direction = starts.front().second;
  for (std::size_t i = 0; i < k; ++i) {
    if (starts[i].first == kNegInf) continue;
    Point u = starts[i].second;
    double v = starts[i].first;
    if (dim == 2) {
      const double theta = std::atan2(u[1], u[0]);
      const double h = 2.0 * M_PI / static_cast<double>(n);
      double t = theta;
      const double g = golden_max([&](double s) { return objective(angle_direction(s)); },
                                  theta - h, theta + h, t);
      if (g > v) {
        v = g;
        u = angle_direction(t);
      }
    } else {
      v = sphere_climb(objective, u, v);
    }
    if (v > best.value) {
      best.value = v;
      best.direction = u;
    }
  }
  return best;
}

nlohmann::json to_json(const SeminormEstimate& e) {
  return {{"value", e.value},         {"sample_count", e.sample_count}, {"lower_bound", e.lower_bound},
          {"seed", e.seed},           {"witness_x", e.witness_x},       {"witness_y", e.witness_y}};
}

SeminormEstimate holder_seminorm(const SampledMap& f, std::span<const PointPair> pairs,
                                 const Majorant& phi, NormKind source_norm) {
  SeminormEstimate est;
  for (const auto& p : pairs) consider(est, f, phi, p.x, f(p.x), p.y, source_norm);
  return est;
}

SeminormEstimate local_holder_seminorm(const SampledMap& f, const WeightField& w,
                                       const DiscretizedDomain& domain,
                                       std::span<const Point> centers, const Majorant& phi,
                                       const LocalSamplingOptions& options) {
  SeminormEstimate est;
  est.seed = options.seed;
  Rng rng(options.seed);
  for (const Point& x : centers) {
    const double wx = w(x);
    if (!(wx > 0.0) || !std::isfinite(wx)) throw EvaluationError("weight is not positive and finite");
    const Point fx = f(x);
    for (std::size_t i = 0; i < options.per_center; ++i) {
      const Point y = point_in_ball(rng, x, wx, i % 2 == 1);
      if (!domain.contains(y)) continue;
      consider(est, f, phi, x, fx, y, NormKind::euclidean);
    }
  }
  return est;
}

SeminormEstimate local_holder_seminorm(const SampledMap& f, const WeightField& w,
                                       std::span<const PointPair> pairs, const Majorant& phi) {
  SeminormEstimate est;
  for (const auto& p : pairs) {
    if (!(distance(p.x, p.y) < w(p.x))) continue;
    consider(est, f, phi, p.x, f(p.x), p.y, NormKind::euclidean);
  }
  return est;
}

std::vector<double> default_radii() {
  std::vector<double> r;
  for (int k = 0; k <= 6; ++k) r.push_back(std::pow(10.0, -1.0 - 0.5 * k));
  return r;
}

nlohmann::json to_json(const DilatationEstimate& e) {
  return {{"value", e.value}, {"radii", e.radii}, {"quotients", e.quotients}, {"isolated", e.isolated}};
}

DilatationEstimate upper_dilatation(const SampledMap& f, const Point& x,
                                    const DilatationOptions& options) {
  DilatationEstimate est;
  if (options.isolated_point) {
    est.isolated = true;
    return est;
  }
  std::vector<double> radii;
  for (double r : options.radii)
    if (r > 0.0 && r < options.admissible_radius) radii.push_back(r);
  if (radii.empty()) throw InvalidInput("upper dilatation: no admissible radius around the point");
  std::sort(radii.begin(), radii.end(), std::greater<>());
  const Point fx = f(x);
  for (double r : radii) {
    auto objective = [&](const Point& u) { return f.range_distance(fx, f(add(x, scale(u, r)))) / r; };
    est.radii.push_back(r);
    est.quotients.push_back(maximize_on_sphere(objective, x.size(), options.sphere).value);
  }
  const std::size_t n = est.quotients.size();
  est.value = est.quotients[n - 1];
  if (n >= 2) est.value = std::max(est.value, est.quotients[n - 2]);
  return est;
}

nlohmann::json to_json(const BlochEstimate& e) {
  return {{"value", e.value},
          {"sample_count", e.sample_count},
          {"lower_bound", e.lower_bound},
          {"witness", e.witness},
          {"witness_dilatation", e.witness_dilatation},
          {"witness_weight", e.witness_weight}};
}

BlochEstimate bloch_norm(const SampledMap& f, const WeightField& w, const DiscretizedDomain& domain,
                         std::span<const Point> points, const DilatationOptions& options) {
  BlochEstimate est;
  for (const Point& x : points) {
    if (!domain.contains(x)) throw InvalidInput("Bloch norm: sample point outside the domain");
    DilatationOptions o = options;
    o.admissible_radius = std::min(o.admissible_radius, domain.boundary_distance(x));
    const double dil = upper_dilatation(f, x, o).value;
    const double wx = w(x);
    if (!(wx > 0.0) || !std::isfinite(wx)) throw EvaluationError("weight is not positive and finite");
    const double q = dil / wx;
    ++est.sample_count;
    if (q > est.value || est.witness.empty()) {
      est.value = std::max(est.value, q);
      est.witness = x;
      est.witness_dilatation = dil;
      est.witness_weight = wx;
    }
  }
  return est;
}

double distance_to_set(const Point& y, const SetDescriptor& A, NormKind norm_kind) {
  if (std::holds_alternative<OriginSet>(A)) return norm(y, norm_kind);
  if (const auto* s = std::get_if<SphereSet>(&A)) {
    if (norm_kind != NormKind::euclidean)
      throw InvalidInput("distance to a sphere is exact only for the euclidean norm");
    return std::abs(norm(y) - s->radius);
  }
  const auto& pts = std::get<FiniteSet>(A).points;
  if (pts.empty()) throw InvalidInput("distance to an empty set");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : pts) best = std::min(best, distance(y, a, norm_kind));
  return best;
}

std::string describe(const SetDescriptor& A) {
  if (std::holds_alternative<OriginSet>(A)) return "{0}";
  if (const auto* s = std::get_if<SphereSet>(&A)) return "sphere r=" + std::to_string(s->radius);
  return "finite set of " + std::to_string(std::get<FiniteSet>(A).points.size()) + " points";
}

SampledMap modulus_power_function(const SampledMap& f, const SetDescriptor& A, double p) {
  if (!(p > 0.0)) throw InvalidInput("p must be positive");
  const NormKind nk = f.range_norm;
  return scalar_map("d(" + f.label + ", " + describe(A) + ")^" + std::to_string(p),
                    [f, A, p, nk](const Point& z) { return std::pow(distance_to_set(f(z), A, nk), p); });
}

nlohmann::json to_json(const RegularityEstimate& e) {
  return {{"K", e.K},
          {"infinite", e.infinite},
          {"sample_count", e.sample_count},
          {"witness_x", e.witness_x},
          {"witness_radius", e.witness_radius},
          {"witness_dilatation", e.witness_dilatation},
          {"witness_oscillation", e.witness_oscillation}};
}

RegularityEstimate regular_oscillation_constant(const SampledMap& f, const WeightField& w,
                                                const DiscretizedDomain& domain,
                                                std::span<const Point> centers,
                                                const OscillationOptions& options) {
  return oscillation_constant(f, w, domain, centers, options, [&f](const Point& x) {
    const Point fx = f(x);
    return std::function<double(const Point&)>(
        [&f, fx](const Point& y) { return f.range_distance(fx, f(y)); });
  });
}

RegularityEstimate p_regular_constant(const SampledMap& f, const WeightField& w,
                                      const DiscretizedDomain& domain, const SetDescriptor& A,
                                      double p, std::span<const Point> centers,
                                      const OscillationOptions& options) {
  if (!(p > 0.0)) throw InvalidInput("p must be positive");
  const SampledMap g = modulus_power_function(f, A, p);
  return oscillation_constant(f, w, domain, centers, options, [&g, p](const Point& x) {
    const double gx = g(x)[0];
    return std::function<double(const Point&)>(
        [&g, gx, p](const Point& y) { return std::pow(std::abs(gx - g(y)[0]), 1.0 / p); });
  });
}

}  // namespace hlab
