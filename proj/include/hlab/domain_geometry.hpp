#pragma once

// Domains with boundary-distance oracles, interior grids, uniform-arc
// certification, and the curve-integral conditions tying weights to majorants.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hlab/majorant.hpp"
#include "hlab/metric_core.hpp"
#include "hlab/random.hpp"

namespace hlab {

/// Ball of the given real dimension centred at the origin. dim = 2 is the unit disk.
struct BallShape {
  std::size_t dim = 2;
  double radius = 1.0;
};

/// Simple polygon in the plane; vertices in order, not repeated at the end.
struct PolygonShape {
  std::vector<Point> vertices;
};

struct AnnulusShape {
  double inner = 0.5;
  double outer = 1.0;
};

using DomainShape = std::variant<BallShape, PolygonShape, AnnulusShape>;

class InteriorGrid;

/// A bounded domain with an exact boundary-distance oracle and a lattice grid
/// of interior points (spacing h, nodes with d(z, ∂D) ≥ interior_margin).
///
/// Immutable. Copies share the lazily built grid.
class DiscretizedDomain {
 public:
  /// interior_margin defaults to 4 × grid_spacing.
  DiscretizedDomain(DomainShape shape, double grid_spacing,
                    std::optional<double> interior_margin = std::nullopt);

  static DiscretizedDomain unit_disk(double grid_spacing = 1.0 / 64);
  static DiscretizedDomain unit_ball(std::size_t dim, double grid_spacing = 1.0 / 16);
  static DiscretizedDomain polygon(std::vector<Point> vertices, double grid_spacing = 1.0 / 64);
  static DiscretizedDomain annulus(double inner, double outer, double grid_spacing = 1.0 / 64);

  const DomainShape& shape() const noexcept { return shape_; }
  std::size_t dimension() const noexcept;
  double grid_spacing() const noexcept { return spacing_; }
  double interior_margin() const noexcept { return margin_; }
  bool is_ball() const noexcept { return std::holds_alternative<BallShape>(shape_); }

  /// Open domain membership.
  bool contains(const Point& x) const;
  /// d(x, ∂D). Throws InvalidInput for points outside the closed domain.
  double boundary_distance(const Point& x) const;

  std::pair<Point, Point> bounding_box() const;
  std::string describe() const;
  nlohmann::json to_json() const;

  /// Uniform point with d(x, ∂D) ≥ min_boundary_distance.
  Point sample_interior(Rng& rng, double min_boundary_distance = 0.0) const;

  /// Interior grid, built on first use and shared thereafter.
  const InteriorGrid& grid() const;

 private:
  struct GridCache;

  /// Signed distance: positive inside, negative outside.
  double signed_boundary_distance(const Point& x) const;

  DomainShape shape_;
  double spacing_;
  double margin_;
  std::shared_ptr<GridCache> cache_;
};

double boundary_distance(const DiscretizedDomain& domain, const Point& x);

/// Lattice nodes h·(i₁, …, i_k) inside the domain at distance ≥ margin from the
/// boundary, with the full (3^k − 1)-neighbour connectivity (8 in the plane).
class InteriorGrid {
 public:
  explicit InteriorGrid(const DiscretizedDomain& domain);

  std::size_t size() const noexcept { return box_index_.size(); }
  std::size_t dimension() const noexcept { return dim_; }
  double spacing() const noexcept { return spacing_; }

  Point node_point(std::size_t node) const;
  /// Nodes at the corners of the lattice cell containing p (only included ones).
  std::vector<std::size_t> cell_corners(const Point& p) const;

  /// Calls f(neighbor, offset_length) for every grid neighbour of node.
  template <class F>
  void for_each_neighbor(std::size_t node, F&& f) const {
    const std::int64_t base = static_cast<std::int64_t>(box_index_[node]);
    for (std::size_t k = 0; k < offsets_.size(); ++k) {
      const std::int32_t nb = node_of_box_[static_cast<std::size_t>(base + offsets_[k])];
      if (nb >= 0) f(static_cast<std::size_t>(nb), offset_lengths_[k]);
    }
  }

 private:
  std::size_t dim_;
  double spacing_;
  std::vector<std::int64_t> lo_;      // lattice index of box cell 0 per axis
  std::vector<std::int64_t> extent_;  // box cells per axis (padded)
  std::vector<std::int64_t> stride_;
  std::vector<std::int32_t> node_of_box_;
  std::vector<std::size_t> box_index_;
  std::vector<std::int64_t> offsets_;
  std::vector<double> offset_lengths_;
};

// ---------------------------------------------------------------------------
// Sampling

std::vector<Point> sample_points(const DiscretizedDomain& domain, Rng& rng, std::size_t count,
                                 double min_boundary_distance = 0.0);

struct PairSamplingOptions {
  std::size_t count = 1000;
  /// Half the pairs are uniform, half have ‖x − y‖ < short_range.
  double short_range = 0.05;
  double min_boundary_distance = 0.0;
};

std::vector<PointPair> sample_pairs(const DiscretizedDomain& domain, Rng& rng,
                                    const PairSamplingOptions& options);

// ---------------------------------------------------------------------------
// Uniform arcs

/// Two-leg arc x → m → y with m = (1 − ‖x − y‖/(2R)) (x + y)/2, each leg split
/// into pieces_per_leg segments. Requires a ball domain.
PolylineCurve cone_arc(const DiscretizedDomain& ball, const Point& x, const Point& y,
                       std::size_t pieces_per_leg = 64);
CurveFamily cone_arcs(const DiscretizedDomain& ball, std::size_t pieces_per_leg = 64);

struct UniformityCertificate {
  double c = 0.0;
  std::size_t pair_count = 0;
  /// min over pairs of c‖x − y‖ − ℓ(γ)
  double worst_margin_i = 0.0;
  /// min over pairs and curve samples z of c·d(z, ∂D) − min(ℓ(γ[x, z]), ℓ(γ[z, y]))
  double worst_margin_ii = 0.0;
  Point witness_x;
  Point witness_y;
  Point witness_z;

  bool pass() const noexcept { return worst_margin_i >= 0.0 && worst_margin_ii >= 0.0; }
};

/// Conditions (i) and (ii) of a c-uniform domain on one arc. Condition (ii) is
/// evaluated at every vertex and samples_per_segment interior points per segment.
/// Throws InvalidInput (naming the vertex) if the curve leaves the domain.
UniformityCertificate uniform_arc_check(const DiscretizedDomain& domain,
                                        const PolylineCurve& curve, const Point& x,
                                        const Point& y, double c,
                                        std::size_t samples_per_segment = 4);

/// Worst case over pairs; for each pair the best curve of the family counts.
UniformityCertificate certify_uniform_family(const DiscretizedDomain& domain,
                                             const CurveFamily& family, double c,
                                             std::span<const PointPair> pairs);

nlohmann::json to_json(const UniformityCertificate& cert);

// ---------------------------------------------------------------------------
// Curve-integral conditions ∫_γ w ≤ M φ(‖x − y‖)

struct IntegralConditionOptions {
  IntegrationOptions integration{};
  /// A curve vertex with d(z, ∂D) below this is flagged as touching the boundary shell.
  double boundary_shell = 1e-9;
  /// Pass iff worst ratio ≤ 1 + tolerance.
  double tolerance = 0.0;
};

struct IntegralConditionReport {
  std::string label;
  double constant = 0.0;
  std::size_t pair_count = 0;
  /// max over pairs of min over curves of ∫_γ w / (M φ(‖x − y‖)); 0 for x = y
  double worst_ratio = 0.0;
  double tolerance = 0.0;
  std::size_t divergence_flags = 0;
  Point witness_x;
  Point witness_y;

  bool pass() const noexcept {
    return divergence_flags == 0 && worst_ratio <= 1.0 + tolerance;
  }
  double margin() const noexcept { return 1.0 + tolerance - worst_ratio; }
};

IntegralConditionReport weight_condition_check(const DiscretizedDomain& domain,
                                                const ScalarField& weight, const Majorant& phi,
                                                const CurveFamily& family, double M,
                                                std::span<const PointPair> pairs,
                                                const IntegralConditionOptions& options = {});

/// ∫_γ d(z, ∂D)^{α−1} ≤ (2c/α) ‖x − y‖^α. Requires α ∈ (0, 1).
IntegralConditionReport uniform_integral_check(const DiscretizedDomain& domain,
                                               const CurveFamily& family, double alpha, double c,
                                               std::span<const PointPair> pairs,
                                               const IntegralConditionOptions& options = {});

/// ∫_γ φ(d(z, ∂D)) / d(z, ∂D) ≤ M φ(‖x − y‖).
IntegralConditionReport lappalainen_condition_check(const DiscretizedDomain& domain,
                                                    const Majorant& phi,
                                                    const CurveFamily& family, double M,
                                                    std::span<const PointPair> pairs,
                                                    const IntegralConditionOptions& options = {});

nlohmann::json to_json(const IntegralConditionReport& report);

}  // namespace hlab
