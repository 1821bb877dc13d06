#include "hlab/weighted_distance.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include "hlab/errors.hpp"

namespace hlab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double checked_weight(const WeightField& w, const Point& p) {
  const double v = w(p);
  if (!(v > 0.0) || !std::isfinite(v))
    throw EvaluationError("weight is not positive and finite at an evaluated point");
  return v;
}

}  // namespace

nlohmann::json to_json(const DistanceEstimate& e) {
  return {{"value", e.value}, {"upper_bound", e.upper_bound}, {"strategy", e.strategy},
          {"support", e.support}};
}

GridDistanceField::GridDistanceField(const DiscretizedDomain& domain, const WeightField& weight,
                                     Point source)
    : domain_(domain), weight_(weight), source_(std::move(source)) {
  const InteriorGrid& grid = domain_.grid();
  if (!domain_.contains(source_)) throw InvalidInput("weighted distance: source is outside the domain");
  const auto corners = grid.cell_corners(source_);
  if (corners.empty()) throw InvalidInput("weighted distance: source is not covered by the interior grid");

  node_weight_.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) node_weight_[i] = checked_weight(weight_, grid.node_point(i));

  dist_.assign(grid.size(), kInf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  const double ws = checked_weight(weight_, source_);
  for (std::size_t c : corners) {
    const double cost = distance(source_, grid.node_point(c)) * 0.5 * (ws + node_weight_[c]);
    if (cost < dist_[c]) {
      dist_[c] = cost;
      queue.emplace(cost, c);
    }
  }
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist_[u]) continue;
    const double wu = node_weight_[u];
    grid.for_each_neighbor(u, [&](std::size_t v, double len) {
      const double nd = d + len * 0.5 * (wu + node_weight_[v]);
      if (nd < dist_[v]) {
        dist_[v] = nd;
        queue.emplace(nd, v);
      }
    });
  }
}

double GridDistanceField::to(const Point& target) const {
  if (target == source_) return 0.0;
  if (!domain_.contains(target)) throw InvalidInput("weighted distance: target is outside the domain");
  const InteriorGrid& grid = domain_.grid();
  const auto corners = grid.cell_corners(target);
  if (corners.empty()) throw InvalidInput("weighted distance: target is not covered by the interior grid");
  const double wt = checked_weight(weight_, target);
  double best = kInf;
  for (std::size_t c : corners) {
    if (dist_[c] == kInf) continue;
    best = std::min(best, dist_[c] + distance(target, grid.node_point(c)) * 0.5 * (wt + node_weight_[c]));
  }
  if (best == kInf) throw NoPathError("weighted distance: no grid path joins the points");
  return best;
}

DistanceEstimate weighted_distance(const DiscretizedDomain& domain, const WeightField& weight,
                                   const Point& x, const Point& y,
                                   const DistanceStrategy& strategy) {
  if (!domain.contains(x) || !domain.contains(y))
    throw InvalidInput("weighted distance: points must be interior");
  DistanceEstimate est;
  if (const auto* cf = std::get_if<CurveFamilyStrategy>(&strategy)) {
    est.strategy = "curve_family";
    if (x == y) return est;
    double best = kInf;
    for (const auto& curve : cf->family(x, y)) {
      for (const auto& v : curve.vertices())
        if (!domain.contains(v)) throw InvalidInput("weighted distance: family curve leaves the domain");
      best = std::min(best, curve_integral(weight.value, curve, cf->integration));
      ++est.support;
    }
    if (est.support == 0) throw NoPathError("weighted distance: curve family produced no curve");
    est.value = best;
    return est;
  }
  est.strategy = "grid_graph";
  if (x == y) return est;
  GridDistanceField field(domain, weight, x);
  est.value = field.to(y);
  est.support = field.node_count();
  return est;
}

DistanceEstimate quasi_hyperbolic_distance(const DiscretizedDomain& domain, const Point& x,
                                           const Point& y, const DistanceStrategy& strategy) {
  for (const Point* p : {&x, &y}) {
    if (!domain.contains(*p)) throw InvalidInput("quasi-hyperbolic distance: point outside the domain");
    if (domain.boundary_distance(*p) < domain.grid_spacing())
      throw NearBoundaryError("quasi-hyperbolic distance: point within one grid cell of the boundary");
  }
  const WeightField w = WeightField::custom(
      "1/d(.,bd D)", [domain](const Point& z) { return 1.0 / domain.boundary_distance(z); });
  return weighted_distance(domain, w, x, y, strategy);
}

}  // namespace hlab
