#pragma once

// Weighted distance d_w(x, y) = inf over curves of ∫_γ w, estimated from above.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hlab/domain_geometry.hpp"
#include "hlab/metric_core.hpp"
#include "hlab/weight_field.hpp"

namespace hlab {

struct CurveFamilyStrategy {
  CurveFamily family;
  IntegrationOptions integration{};
};
struct GridGraphStrategy {};
using DistanceStrategy = std::variant<CurveFamilyStrategy, GridGraphStrategy>;

/// The infimum over all curves is not computable; every value here is the cost
/// of an explicit path and so bounds d_w from above.
struct DistanceEstimate {
  double value = 0.0;
  bool upper_bound = true;
  std::string strategy;
  /// Curves tried (curve family) or grid nodes (grid graph).
  std::size_t support = 0;
};

nlohmann::json to_json(const DistanceEstimate& e);

/// Single-source shortest paths on the interior grid with edge cost
/// length × mean of endpoint weights. Off-grid points are joined to the
/// corners of their lattice cell.
class GridDistanceField {
 public:
  /// Throws InvalidInput if source has no grid corner in the domain.
  GridDistanceField(const DiscretizedDomain& domain, const WeightField& weight, Point source);

  /// Throws InvalidInput if target is off the grid, NoPathError if unreachable.
  double to(const Point& target) const;
  double node_distance(std::size_t node) const { return dist_.at(node); }
  const Point& source() const noexcept { return source_; }
  std::size_t node_count() const noexcept { return dist_.size(); }

 private:
  DiscretizedDomain domain_;
  WeightField weight_;
  Point source_;
  std::vector<double> node_weight_;
  std::vector<double> dist_;
};

DistanceEstimate weighted_distance(const DiscretizedDomain& domain, const WeightField& weight,
                                   const Point& x, const Point& y,
                                   const DistanceStrategy& strategy = GridGraphStrategy{});

/// Weighted distance with w(z) = 1 / d(z, ∂D). Throws NearBoundaryError when x
/// or y lies within one grid cell of the boundary.
DistanceEstimate quasi_hyperbolic_distance(const DiscretizedDomain& domain, const Point& x,
                                           const Point& y,
                                           const DistanceStrategy& strategy = GridGraphStrategy{});

}  // namespace hlab
