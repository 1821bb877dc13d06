#include "hlab/majorant.hpp"

#include <cmath>
#include <limits>

#include "hlab/errors.hpp"

namespace hlab {

Majorant Majorant::power(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw InvalidInput("power majorant needs a positive finite exponent");
  Majorant m;
  m.kind_ = Kind::standard_alpha;
  m.alpha_ = alpha;
  m.name_ = "phi_" + std::to_string(alpha);
  m.value_ = [alpha](double t) { return t <= 0.0 ? 0.0 : std::pow(t, alpha); };
  m.derivative_ = [alpha](double t) { return alpha * std::pow(t, alpha - 1.0); };
  return m;
}

Majorant Majorant::custom(std::string name, std::function<double(double)> value,
                          std::function<double(double)> derivative) {
  Majorant m;
  m.kind_ = Kind::custom;
  m.alpha_ = std::numeric_limits<double>::quiet_NaN();
  m.name_ = std::move(name);
  m.value_ = std::move(value);
  m.derivative_ = std::move(derivative);
  return m;
}

MajorantDiagnostics majorant_validate(const Majorant& phi, std::span<const double> grid) {
  if (grid.empty()) throw InvalidInput("majorant_validate: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw InvalidInput("majorant_validate: grid must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw InvalidInput("majorant_validate: grid must be strictly increasing");
  }

  MajorantDiagnostics d;
  d.grid_size = grid.size();
  const double at_zero = phi(0.0);
  if (!std::isfinite(at_zero)) throw EvaluationError("majorant is not finite at 0");
  d.zero_at_origin = at_zero == 0.0;
  d.positive = true;
  d.nondecreasing = true;
  d.derivative_nonincreasing = true;

  double prev_value = at_zero;
  double prev_derivative = std::numeric_limits<double>::infinity();
  for (double t : grid) {
    const double v = phi(t);
    const double dv = phi.derivative(t);
    if (!std::isfinite(v) || !std::isfinite(dv))
      throw EvaluationError("majorant is not finite at t = " + std::to_string(t));
    if (!(v > 0.0)) d.positive = false;
    if (v < prev_value) d.nondecreasing = false;
    if (dv > prev_derivative) d.derivative_nonincreasing = false;
    const double ratio = dv > 0.0 ? v / (t * dv) : std::numeric_limits<double>::infinity();
    d.best_growth_constant = std::max(d.best_growth_constant, ratio);
    prev_value = v;
    prev_derivative = dv;
  }
  return d;
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) throw InvalidInput("geometric_grid: bad range");
  std::vector<double> g(n);
  const double step = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo * std::exp(step * static_cast<double>(i));
  g.back() = hi;
  return g;
}

nlohmann::json to_json(const MajorantDiagnostics& d) {
  return {{"zero_at_origin", d.zero_at_origin},
          {"positive", d.positive},
          {"nondecreasing", d.nondecreasing},
          {"derivative_nonincreasing", d.derivative_nonincreasing},
          {"best_growth_constant", d.best_growth_constant},
          {"grid_size", d.grid_size},
          {"valid", d.valid()}};
}

}  // namespace hlab
