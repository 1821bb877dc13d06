#pragma once

#include <functional>
#include <span>
#include <string>

#include <json.hpp>

namespace hlab {

/// A modulus φ: [0, ∞) → [0, ∞) together with its derivative.
class Majorant {
 public:
  enum class Kind { standard_alpha, custom };

  /// φ_α(t) = t^α.
  static Majorant power(double alpha);
  static Majorant custom(std::string name, std::function<double(double)> value,
                         std::function<double(double)> derivative);

  double operator()(double t) const { return value_(t); }
  double derivative(double t) const { return derivative_(t); }
  Kind kind() const noexcept { return kind_; }
  /// Exponent for standard_alpha, NaN otherwise.
  double alpha() const noexcept { return alpha_; }
  const std::string& name() const noexcept { return name_; }

 private:
  Majorant() = default;

  Kind kind_ = Kind::custom;
  double alpha_ = 0.0;
  std::string name_;
  std::function<double(double)> value_;
  std::function<double(double)> derivative_;
};

struct MajorantDiagnostics {
  bool zero_at_origin = false;
  bool positive = false;
  bool nondecreasing = false;
  bool derivative_nonincreasing = false;
  /// max over the grid of φ(t) / (t φ'(t)); the smallest admissible A in φ(t)/t ≤ A φ'(t).
  double best_growth_constant = 0.0;
  std::size_t grid_size = 0;

  bool valid() const noexcept {
    return zero_at_origin && positive && nondecreasing && derivative_nonincreasing;
  }
  /// φ(t)/t < A φ'(t) on the grid, tested as ≤ with 1e-9 slack.
  bool satisfies_growth_condition(double A) const noexcept {
    return best_growth_constant <= A + 1e-9;
  }
};

/// Throws InvalidInput if the grid is not strictly increasing and positive, and
/// EvaluationError on non-finite values.
MajorantDiagnostics majorant_validate(const Majorant& phi, std::span<const double> grid);

/// Geometric grid of n points on [lo, hi].
std::vector<double> geometric_grid(double lo, double hi, std::size_t n);

nlohmann::json to_json(const MajorantDiagnostics& d);

}  // namespace hlab
