#pragma once

// Sampled estimators for Hölder/Lipschitz seminorms, the upper dilatation d*f,
// Bloch norms, and regular-oscillation / p-regularity constants.
//
// Every seminorm estimate is a maximum over finitely many samples, hence a
// lower bound for the supremum it approximates. Results carry sample counts,
// seeds and the worst-case witness.

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hlab/domain_geometry.hpp"
#include "hlab/majorant.hpp"
#include "hlab/metric_core.hpp"
#include "hlab/weight_field.hpp"

namespace hlab {

/// f: X → Y evaluated pointwise, with the metric of the range.
struct SampledMap {
  std::function<Point(const Point&)> evaluate;
  std::size_t range_dim = 1;
  NormKind range_norm = NormKind::euclidean;
  std::string label;

  /// Throws EvaluationError on non-finite output.
  Point operator()(const Point& x) const;
  double range_distance(const Point& a, const Point& b) const {
    return distance(a, b, range_norm);
  }
};

SampledMap identity_map(std::size_t dim);
SampledMap constant_map(Point value);
SampledMap scaled_identity(std::size_t dim, double lambda);
SampledMap scalar_map(std::string label, std::function<double(const Point&)> g);

// ---------------------------------------------------------------------------
// Sphere search

struct SphereSearchOptions {
  std::size_t directions = 256;
  bool refine = true;
  std::size_t refine_starts = 3;
  std::uint64_t seed = 0x5eedULL;
};

struct SphereSearchResult {
  double value = -std::numeric_limits<double>::infinity();
  Point direction;
};

/// Maximises objective(u) over unit vectors u of ℝ^dim: an even angular grid
/// (dim 2) or random directions (dim ≥ 3), then local refinement from the best
/// starts (golden section on the angle, or pattern search on the sphere).
SphereSearchResult maximize_on_sphere(const std::function<double(const Point&)>& objective,
                                      std::size_t dim, const SphereSearchOptions& options = {});

// ---------------------------------------------------------------------------
// Seminorms

struct SeminormEstimate {
  double value = 0.0;
  std::size_t sample_count = 0;
  bool lower_bound = true;
  std::uint64_t seed = 0;
  Point witness_x;
  Point witness_y;
};

nlohmann::json to_json(const SeminormEstimate& e);

/// max over pairs of d_Y(f(x), f(y)) / φ(d_X(x, y)); pairs with x = y are skipped.
/// Throws MajorantDegeneracyError if φ vanishes at a positive distance.
SeminormEstimate holder_seminorm(const SampledMap& f, std::span<const PointPair> pairs,
                                 const Majorant& phi, NormKind source_norm = NormKind::euclidean);

struct LocalSamplingOptions {
  std::size_t per_center = 64;
  std::uint64_t seed = 1;
};

/// Same quotient with y drawn from B(x, w(x)) ∩ D: half uniform in the ball,
/// half in the outer shell at radius (0.9, 1)·w(x).
SeminormEstimate local_holder_seminorm(const SampledMap& f, const WeightField& w,
                                       const DiscretizedDomain& domain,
                                       std::span<const Point> centers, const Majorant& phi,
                                       const LocalSamplingOptions& options = {});

/// Restriction of holder_seminorm to the given pairs with d(x, y) < w(x).
SeminormEstimate local_holder_seminorm(const SampledMap& f, const WeightField& w,
                                       std::span<const PointPair> pairs, const Majorant& phi);

// ---------------------------------------------------------------------------
// Upper dilatation and Bloch norm

/// r_k = 10^{−1−k/2}, k = 0..6
std::vector<double> default_radii();

struct DilatationOptions {
  std::vector<double> radii = default_radii();
  SphereSearchOptions sphere{};
  /// Radii ≥ this are outside the domain around x and skipped.
  double admissible_radius = std::numeric_limits<double>::infinity();
  /// d*f = 0 at isolated points by definition.
  bool isolated_point = false;
};

struct DilatationEstimate {
  /// max of Q(r) over the two smallest admissible radii
  double value = 0.0;
  std::vector<double> radii;
  /// Q(r) = sup over the sphere of radius r of d_Y(f(x), f(y)) / r
  std::vector<double> quotients;
  bool isolated = false;
};

nlohmann::json to_json(const DilatationEstimate& e);

/// Throws InvalidInput when every radius exits the domain.
DilatationEstimate upper_dilatation(const SampledMap& f, const Point& x,
                                    const DilatationOptions& options = {});

struct BlochEstimate {
  double value = 0.0;
  std::size_t sample_count = 0;
  bool lower_bound = true;
  Point witness;
  double witness_dilatation = 0.0;
  double witness_weight = 0.0;
};

nlohmann::json to_json(const BlochEstimate& e);

/// max over points of d*f(x) / w(x). Radii are restricted to d(x, ∂D).
BlochEstimate bloch_norm(const SampledMap& f, const WeightField& w, const DiscretizedDomain& domain,
                         std::span<const Point> points, const DilatationOptions& options = {});

// ---------------------------------------------------------------------------
// Distance to a set

struct OriginSet {};
struct SphereSet {
  double radius = 1.0;
};
struct FiniteSet {
  std::vector<Point> points;
};
using SetDescriptor = std::variant<OriginSet, SphereSet, FiniteSet>;

/// inf over A of the range distance; exact for the origin and centred spheres.
double distance_to_set(const Point& y, const SetDescriptor& A, NormKind norm = NormKind::euclidean);
std::string describe(const SetDescriptor& A);

/// g(z) = distance_to_set(f(z), A)^p as a real-valued map.
SampledMap modulus_power_function(const SampledMap& f, const SetDescriptor& A, double p);

// ---------------------------------------------------------------------------
// Regular oscillation and p-regularity

struct OscillationOptions {
  /// Radii r = fraction · w(x), fractions in (0, 1).
  std::vector<double> radius_fractions = {0.25, 0.5, 0.75, 0.99};
  /// Concentric spheres of radius fraction · r searched inside B(x, r).
  std::vector<double> shell_fractions = {1.0, 0.75, 0.5, 0.25};
  std::size_t interior_samples = 64;
  SphereSearchOptions sphere{};
  DilatationOptions dilatation{};
  std::uint64_t seed = 2;
};

struct RegularityEstimate {
  /// max over sampled (x, r) of d*f(x) · r / oscillation(x, r)
  double K = 0.0;
  /// Zero oscillation with nonzero d*f was seen (K > 1e12 counts as zero
  /// oscillation, since below that the oscillation is rounding noise).
  bool infinite = false;
  std::size_t sample_count = 0;
  Point witness_x;
  double witness_radius = 0.0;
  double witness_dilatation = 0.0;
  double witness_oscillation = 0.0;
};

nlohmann::json to_json(const RegularityEstimate& e);

/// Smallest sampled K with d*f(x) ≤ (K/r) sup_{y∈B(x,r)} d_Y(f(x), f(y)).
RegularityEstimate regular_oscillation_constant(const SampledMap& f, const WeightField& w,
                                                const DiscretizedDomain& domain,
                                                std::span<const Point> centers,
                                                const OscillationOptions& options = {});

/// Smallest sampled K with
/// d*f(x) ≤ (K/r) sup_{y∈B(x,r)} |d(f(x), A)^p − d(f(y), A)^p|^{1/p}.
RegularityEstimate p_regular_constant(const SampledMap& f, const WeightField& w,
                                      const DiscretizedDomain& domain, const SetDescriptor& A,
                                      double p, std::span<const Point> centers,
                                      const OscillationOptions& options = {});

}  // namespace hlab
