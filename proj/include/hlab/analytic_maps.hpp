#pragma once

// Analytic maps ℂⁿ → ℂᵐ with exact differentials: multivariate polynomials and
// closed-form scalar functions such as (1 − z)^α.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlab/domain_geometry.hpp"
#include "hlab/linear_operator.hpp"
#include "hlab/lipschitz_estimators.hpp"
#include "hlab/random.hpp"

namespace hlab {

class AnalyticMap {
 public:
  virtual ~AnalyticMap() = default;
  virtual std::size_t source_dim() const = 0;
  virtual std::size_t target_dim() const = 0;
  virtual CVector evaluate(const CVector& z) const = 0;
  /// Exact Fréchet differential (target_dim × source_dim).
  virtual LinearOperator differential(const CVector& z) const = 0;
  virtual std::string label() const = 0;
};

using AnalyticMapPtr = std::shared_ptr<const AnalyticMap>;

struct Monomial {
  std::vector<int> exponents;
  Complex coefficient;
};

class PolynomialMap final : public AnalyticMap {
 public:
  static constexpr int kMaxDegree = 6;
  static constexpr std::size_t kMaxDimension = 5;

  /// One monomial list per target component. Duplicate exponents are merged.
  /// Throws InvalidInput above the degree or dimension cap, on negative
  /// exponents, exponent vectors of the wrong length, or non-finite coefficients.
  PolynomialMap(std::size_t source_dim, std::vector<std::vector<Monomial>> components,
                std::string label = "polynomial");

  static PolynomialMap identity(std::size_t n);
  static PolynomialMap constant(std::size_t source_dim, const CVector& value);
  static PolynomialMap linear(const LinearOperator& L);

  std::size_t source_dim() const override { return n_; }
  std::size_t target_dim() const override { return components_.size(); }
  CVector evaluate(const CVector& z) const override;
  LinearOperator differential(const CVector& z) const override;
  std::string label() const override { return label_; }

  int degree() const noexcept { return degree_; }
  const std::vector<std::vector<Monomial>>& components() const noexcept { return components_; }
  PolynomialMap scaled(Complex s) const;
  PolynomialMap with_label(std::string label) const;

  nlohmann::json to_json() const;
  static PolynomialMap from_json(const nlohmann::json& j);

 private:
  std::size_t n_;
  int degree_ = 0;
  std::vector<std::vector<Monomial>> components_;
  std::string label_;
};

/// Scalar f: ℂ → ℂ with a stored derivative formula.
class ClosedFormMap final : public AnalyticMap {
 public:
  ClosedFormMap(std::string label, std::function<Complex(Complex)> value,
                std::function<Complex(Complex)> derivative);

  /// (1 − z)^α = exp(α Log(1 − z)), principal branch; derivative −α (1 − z)^{α−1}.
  static ClosedFormMap power_branch(double alpha);

  std::size_t source_dim() const override { return 1; }
  std::size_t target_dim() const override { return 1; }
  CVector evaluate(const CVector& z) const override;
  LinearOperator differential(const CVector& z) const override;
  std::string label() const override { return label_; }
  Complex value(Complex z) const { return value_(z); }
  Complex derivative(Complex z) const { return derivative_(z); }

 private:
  std::string label_;
  std::function<Complex(Complex)> value_;
  std::function<Complex(Complex)> derivative_;
};

/// All monomials of total degree ≤ degree, coefficients uniform in the complex
/// box [−box, box]².
PolynomialMap random_polynomial(std::size_t n, std::size_t m, int degree, Rng& rng,
                                double box = 1.0);

struct BallSupOptions {
  /// 0 uses 4096 on the circle and 1024 · n otherwise.
  std::size_t directions = 0;
  std::size_t refine_starts = 8;
  std::uint64_t seed = 0x737570ULL;
};

struct BallSup {
  double value = 0.0;
  CVector witness;
};

/// sup of ‖f‖ over the unit sphere of ℂⁿ, which by the maximum principle is the
/// sup over the ball for analytic f. Sampled, so a lower bound.
BallSup ball_sup_norm(const AnalyticMap& f, const BallSupOptions& options = {});

/// Measured sups up to 1 + this count as bounded by 1 (rounding in |f| on the sphere).
inline constexpr double kUnitBoundRoundoff = 1e-12;

struct NormalizedPolynomial {
  PolynomialMap map;
  double measured_sup = 0.0;
};

/// f / (sup · (1 + 1e−9)); a zero map is returned unchanged.
NormalizedPolynomial normalize_on_ball(const PolynomialMap& f, const BallSupOptions& options = {});

/// The realified map ℝ²ⁿ → ℝ²ᵐ.
SampledMap as_sampled_map(AnalyticMapPtr f);

struct BridgeReport {
  Point point;
  double differential_norm = 0.0;
  double dilatation = 0.0;
  double difference = 0.0;
  double tolerance = 1e-3;
  double smallest_radius = 0.0;
  DilatationEstimate profile;
  bool pass() const noexcept { return difference <= tolerance; }
};

nlohmann::json to_json(const BridgeReport& r);

/// |‖df(z)‖ − d*f(z)| with z given in real coordinates inside the unit ball.
BridgeReport differential_norm_dilatation_bridge(AnalyticMapPtr f, const Point& z,
                                                 const DilatationOptions& options = {},
                                                 double tolerance = 1e-3);

struct BoundedRegularityReport {
  double p = 1.0;
  double measured_sup = 0.0;
  RegularityEstimate estimate;
  double tolerance = 1e-3;
  bool pass() const noexcept { return !estimate.infinite && estimate.K <= 1.0 + tolerance; }
};

nlohmann::json to_json(const BoundedRegularityReport& r);

/// p-regularity with A = {0}, p = 1 for scalar range and p = 2 otherwise, weight
/// d(·, ∂D). Throws PreconditionError if the measured sup exceeds 1.
BoundedRegularityReport bounded_regularity_check(AnalyticMapPtr f, const DiscretizedDomain& domain,
                                                 std::span<const Point> centers,
                                                 const OscillationOptions& options = {},
                                                 double tolerance = 1e-3);

}  // namespace hlab
