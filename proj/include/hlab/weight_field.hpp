#pragma once

#include <functional>
#include <string>

#include "hlab/domain_geometry.hpp"
#include "hlab/metric_core.hpp"

namespace hlab {

/// Everywhere-positive continuous function on a domain.
struct WeightField {
  enum class Kind { boundary_distance, half_boundary_distance, power, constant, custom };

  std::function<double(const Point&)> value;
  Kind kind = Kind::custom;
  /// Exponent for power, value for constant, unused otherwise.
  double parameter = 0.0;
  std::string label;

  double operator()(const Point& x) const { return value(x); }

  /// w(x) = d(x, ∂D)
  static WeightField boundary_distance(const DiscretizedDomain& domain);
  /// w(x) = ½ d(x, ∂D), the weight of the local class Λ_loc.
  static WeightField half_boundary_distance(const DiscretizedDomain& domain);
  /// w(x) = d(x, ∂D)^exponent
  static WeightField power(const DiscretizedDomain& domain, double exponent);
  static WeightField constant(double c);
  static WeightField custom(std::string label, std::function<double(const Point&)> value);
};

/// w^exponent, keeping the kind information when it is a power of the distance.
WeightField power_of(const WeightField& w, double exponent);

}  // namespace hlab
