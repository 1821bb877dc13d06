#pragma once

// Points, polyline curves, curve length, and curve integrals.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

namespace hlab {

/// Real coordinates. Complex spaces ℂⁿ are stored as ℝ²ⁿ, interleaved (re, im).
using Point = std::vector<double>;

enum class NormKind { euclidean, maximum, taxicab };

double norm(std::span<const double> x, NormKind kind = NormKind::euclidean);
double distance(std::span<const double> a, std::span<const double> b,
                NormKind kind = NormKind::euclidean);

Point add(const Point& a, const Point& b);
Point subtract(const Point& a, const Point& b);
Point scale(const Point& a, double s);
/// a + t (b − a)
Point lerp(const Point& a, const Point& b, double t);

using ScalarField = std::function<double(const Point&)>;

struct PointPair {
  Point x;
  Point y;
};

/// A rectifiable curve represented by its vertices.
///
/// Consecutive duplicate vertices are dropped on construction. A curve whose
/// vertices all coincide is the trivial (zero-length) curve at that point.
class PolylineCurve {
 public:
  /// Throws InvalidInput if fewer than two vertices are given or dimensions differ.
  explicit PolylineCurve(std::vector<Point> vertices, NormKind norm = NormKind::euclidean);

  static PolylineCurve trivial(Point p, NormKind norm = NormKind::euclidean);
  /// Straight segment a → b split into `pieces` equal parts.
  static PolylineCurve segment(const Point& a, const Point& b, std::size_t pieces = 1,
                               NormKind norm = NormKind::euclidean);

  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  const std::vector<double>& cumulative_lengths() const noexcept { return cumulative_; }
  double length() const noexcept { return cumulative_.back(); }
  bool is_trivial() const noexcept { return vertices_.size() == 1; }
  std::size_t dimension() const noexcept { return vertices_.front().size(); }
  NormKind norm_kind() const noexcept { return norm_; }
  const Point& front() const noexcept { return vertices_.front(); }
  const Point& back() const noexcept { return vertices_.back(); }

  /// γ(s) for the arc-length parameter s ∈ [0, ℓ] (clamped).
  Point at_arclength(double s) const;

  /// Arc-length position of z if it lies on the curve within 1e-9·ℓ (first hit).
  std::optional<double> locate(const Point& z) const;

  /// The portion between arc-length positions s0 and s1, oriented from s0 to s1.
  PolylineCurve between(double s0, double s1) const;

  PolylineCurve reversed() const;

 private:
  PolylineCurve() = default;
  void rebuild();

  std::vector<Point> vertices_;
  std::vector<double> cumulative_;
  NormKind norm_ = NormKind::euclidean;
};

/// Sum of segment lengths. Throws InvalidInput for a vertex list shorter than 2.
double curve_length(const PolylineCurve& curve);
double curve_length(const std::vector<Point>& vertices, NormKind norm = NormKind::euclidean);

/// γ[z, w]: throws InvalidInput if z or w is not on the curve.
PolylineCurve subcurve(const PolylineCurve& curve, const Point& z, const Point& w);

struct IntegrationOptions {
  double rel_tol = 1e-8;
  /// bisection depth of the adaptive rule on each segment
  unsigned max_depth = 30;
};

/// ∫_0^ℓ f(γ(s)) ds, summed over segments, each by adaptive 15-point
/// Gauss–Kronrod. Throws EvaluationError on a non-finite value and
/// ConvergenceError if the summed error estimate stays above rel_tol · ∫|f|.
double curve_integral(const ScalarField& f, const PolylineCurve& curve,
                      const IntegrationOptions& options = {});

/// Γ(x, y), finitely sampled: one or more curves joining x to y.
using CurveFamily = std::function<std::vector<PolylineCurve>(const Point&, const Point&)>;

CurveFamily straight_segments(std::size_t pieces = 64);

// JSON: a point is an array of numbers, a curve an array of points.
nlohmann::json curve_to_json(const PolylineCurve& curve);
PolylineCurve curve_from_json(const nlohmann::json& j);

}  // namespace hlab
