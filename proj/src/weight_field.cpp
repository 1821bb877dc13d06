#include "hlab/weight_field.hpp"

#include <cmath>

#include "hlab/errors.hpp"

namespace hlab {

WeightField WeightField::boundary_distance(const DiscretizedDomain& domain) {
  return {[domain](const Point& x) { return domain.boundary_distance(x); },
          Kind::boundary_distance, 1.0, "d(.,bd D)"};
}

WeightField WeightField::half_boundary_distance(const DiscretizedDomain& domain) {
  return {[domain](const Point& x) { return 0.5 * domain.boundary_distance(x); },
          Kind::half_boundary_distance, 0.5, "0.5*d(.,bd D)"};
}

WeightField WeightField::power(const DiscretizedDomain& domain, double exponent) {
  return {[domain, exponent](const Point& x) {
            return std::pow(domain.boundary_distance(x), exponent);
          },
          Kind::power, exponent, "d(.,bd D)^" + std::to_string(exponent)};
}

WeightField WeightField::constant(double c) {
  if (!(c > 0.0)) throw InvalidInput("constant weight must be positive");
  return {[c](const Point&) { return c; }, Kind::constant, c, "const " + std::to_string(c)};
}

WeightField WeightField::custom(std::string label, std::function<double(const Point&)> value) {
  return {std::move(value), Kind::custom, 0.0, std::move(label)};
}

WeightField power_of(const WeightField& w, double exponent) {
  auto base = w.value;
  return {[base, exponent](const Point& x) { return std::pow(base(x), exponent); },
          WeightField::Kind::custom, exponent, "(" + w.label + ")^" + std::to_string(exponent)};
}

}  // namespace hlab
