#include "hlab/metric_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hlab/errors.hpp"

namespace hlab {

double norm(std::span<const double> x, NormKind kind) {
  double acc = 0.0;
  switch (kind) {
    case NormKind::euclidean:
      for (double v : x) acc += v * v;
      return std::sqrt(acc);
    case NormKind::maximum:
      for (double v : x) acc = std::max(acc, std::abs(v));
      return acc;
    case NormKind::taxicab:
      for (double v : x) acc += std::abs(v);
      return acc;
  }
  return acc;
}

double distance(std::span<const double> a, std::span<const double> b, NormKind kind) {
  if (a.size() != b.size()) throw InvalidInput("distance: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    switch (kind) {
      case NormKind::euclidean:
        acc += d * d;
        break;
      case NormKind::maximum:
        acc = std::max(acc, std::abs(d));
        break;
      case NormKind::taxicab:
        acc += std::abs(d);
        break;
    }
  }
  return kind == NormKind::euclidean ? std::sqrt(acc) : acc;
}

Point add(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point subtract(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point scale(const Point& a, double s) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Point lerp(const Point& a, const Point& b, double t) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * (b[i] - a[i]);
  return r;
}

// ---------------------------------------------------------------------------
// PolylineCurve

PolylineCurve::PolylineCurve(std::vector<Point> vertices, NormKind norm) : norm_(norm) {
  if (vertices.size() < 2) throw InvalidInput("curve needs at least two vertices");
  const std::size_t dim = vertices.front().size();
  if (dim == 0) throw InvalidInput("curve vertices must have at least one coordinate");
  for (const auto& v : vertices) {
    if (v.size() != dim) throw InvalidInput("curve vertices differ in dimension");
    for (double c : v)
      if (!std::isfinite(c)) throw InvalidInput("curve vertex has a non-finite coordinate");
  }
  vertices_.reserve(vertices.size());
  for (auto& v : vertices) {
    if (!vertices_.empty() && vertices_.back() == v) continue;
    vertices_.push_back(std::move(v));
  }
  rebuild();
}

PolylineCurve PolylineCurve::trivial(Point p, NormKind norm) {
  PolylineCurve c;
  c.norm_ = norm;
  c.vertices_.push_back(std::move(p));
  c.rebuild();
  return c;
}

PolylineCurve PolylineCurve::segment(const Point& a, const Point& b, std::size_t pieces,
                                     NormKind norm) {
  if (a == b) return trivial(a, norm);
  pieces = std::max<std::size_t>(pieces, 1);
  std::vector<Point> v;
  v.reserve(pieces + 1);
  v.push_back(a);
  for (std::size_t i = 1; i < pieces; ++i)
    v.push_back(lerp(a, b, static_cast<double>(i) / static_cast<double>(pieces)));
  v.push_back(b);
  return PolylineCurve(std::move(v), norm);
}

void PolylineCurve::rebuild() {
  cumulative_.assign(vertices_.size(), 0.0);
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    cumulative_[i] = cumulative_[i - 1] + distance(vertices_[i - 1], vertices_[i], norm_);
}

Point PolylineCurve::at_arclength(double s) const {
  if (is_trivial() || s <= 0.0) return vertices_.front();
  if (s >= length()) return vertices_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  const std::size_t i = static_cast<std::size_t>(it - cumulative_.begin());  // s < cumulative_[i]
  const double seg = cumulative_[i] - cumulative_[i - 1];
  return lerp(vertices_[i - 1], vertices_[i], (s - cumulative_[i - 1]) / seg);
}

std::optional<double> PolylineCurve::locate(const Point& z) const {
  if (z.size() != dimension()) return std::nullopt;
  if (is_trivial()) {
    return distance(z, vertices_.front(), norm_) <= 1e-12 ? std::optional<double>(0.0)
                                                         : std::nullopt;
  }
  const double tol = 1e-9 * length();
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[i + 1];
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      num += (z[k] - a[k]) * (b[k] - a[k]);
      den += (b[k] - a[k]) * (b[k] - a[k]);
    }
    const double t = std::clamp(num / den, 0.0, 1.0);
    if (distance(z, lerp(a, b, t), norm_) <= tol)
      return cumulative_[i] + t * (cumulative_[i + 1] - cumulative_[i]);
  }
  return std::nullopt;
}

PolylineCurve PolylineCurve::between(double s0, double s1) const {
  if (s0 > s1) return between(s1, s0).reversed();
  s0 = std::clamp(s0, 0.0, length());
  s1 = std::clamp(s1, 0.0, length());
  if (is_trivial() || s1 <= s0) return trivial(at_arclength(s0), norm_);
  std::vector<Point> v;
  v.push_back(at_arclength(s0));
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (cumulative_[i] > s0 && cumulative_[i] < s1) v.push_back(vertices_[i]);
  v.push_back(at_arclength(s1));
  return PolylineCurve(std::move(v), norm_);
}

PolylineCurve PolylineCurve::reversed() const {
  PolylineCurve c;
  c.norm_ = norm_;
  c.vertices_.assign(vertices_.rbegin(), vertices_.rend());
  c.rebuild();
  return c;
}

double curve_length(const PolylineCurve& curve) { return curve.length(); }

double curve_length(const std::vector<Point>& vertices, NormKind norm) {
  return PolylineCurve(vertices, norm).length();
}

PolylineCurve subcurve(const PolylineCurve& curve, const Point& z, const Point& w) {
  const auto sz = curve.locate(z);
  if (!sz) throw InvalidInput("subcurve: start point is not on the curve");
  const auto sw = curve.locate(w);
  if (!sw) throw InvalidInput("subcurve: end point is not on the curve");
  return curve.between(*sz, *sw);
}

// ---------------------------------------------------------------------------
// Curve integral

double curve_integral(const ScalarField& f, const PolylineCurve& curve,
                      const IntegrationOptions& options) {
  if (curve.is_trivial()) return 0.0;
  using boost::math::quadrature::gauss_kronrod;
  const auto& v = curve.vertices();
  const auto& cum = curve.cumulative_lengths();
  double total = 0.0;
  double total_error = 0.0;
  double total_l1 = 0.0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double len = cum[i + 1] - cum[i];
    // integrated over t ∈ [0, 1]: the error estimate has an absolute floor near
    // 1e-15, which a relative tolerance on a very short segment never reaches
    auto g = [&](double t) {
      const double val = f(lerp(v[i], v[i + 1], t));
      if (!std::isfinite(val)) throw EvaluationError("curve integral: integrand is not finite");
      return val;
    };
    double err = 0.0, l1 = 0.0;
    total += len * gauss_kronrod<double, 15>::integrate(g, 0.0, 1.0, options.max_depth, options.rel_tol,
                                                        &err, &l1);
    total_error += len * err;
    total_l1 += len * l1;
  }
  if (total_error > options.rel_tol * total_l1 && total_error > 1e-300)
    throw ConvergenceError("curve integral: error estimate above tolerance at the depth limit",
                           total - total_error, total);
  return total;
}

CurveFamily straight_segments(std::size_t pieces) {
  return [pieces](const Point& x, const Point& y) {
    return std::vector<PolylineCurve>{PolylineCurve::segment(x, y, pieces)};
  };
}

nlohmann::json curve_to_json(const PolylineCurve& curve) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& p : curve.vertices()) j.push_back(p);
  return j;
}

PolylineCurve curve_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("curve JSON must be an array of coordinate arrays");
  std::vector<Point> vertices;
  for (const auto& p : j) {
    if (!p.is_array()) throw InvalidInput("curve JSON vertex must be an array of numbers");
    vertices.push_back(p.get<Point>());
  }
  if (vertices.size() == 1) return PolylineCurve::trivial(vertices.front());
  return PolylineCurve(std::move(vertices));
}

}  // namespace hlab
