#pragma once

// Numerical checks of the inequalities, each with its explicit constant,
// recorded as TheoremCheck records.

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlab/analytic_maps.hpp"
#include "hlab/domain_geometry.hpp"
#include "hlab/lipschitz_estimators.hpp"
#include "hlab/majorant.hpp"
#include "hlab/weight_field.hpp"

namespace hlab {

/// Which sides of `lhs ≤ rhs` come from finite sampling. A sampled seminorm is
/// a lower bound, so a sampled LHS errs on the safe side while a sampled RHS
/// needs a slack factor or an explicit waiver.
struct BiasAnnotation {
  bool lhs_sampled_lower_bound = false;
  bool rhs_sampled_lower_bound = false;
  /// rhs = constant · rhs_measured · (1 + slack)
  double slack = 0.0;
  std::string waiver;
};

/// True unless the RHS is a sampled lower bound with neither slack nor waiver.
bool bias_policy_ok(const BiasAnnotation& bias);

struct TheoremCheck {
  std::string name;
  std::string statement;
  nlohmann::json inputs = nlohmann::json::object();
  double lhs = 0.0;
  double rhs_measured = 0.0;
  double constant = 1.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  BiasAnnotation bias;
  nlohmann::json measurements = nlohmann::json::object();
  nlohmann::json witness = nlohmann::json::object();
  bool errored = false;
  std::string error;

  double margin() const noexcept { return rhs - lhs; }
  bool pass() const noexcept { return !errored && margin() >= -tolerance; }
};

/// Fills rhs from constant, rhs_measured and the slack. Throws InvalidInput
/// when the bias policy is violated.
void finalize(TheoremCheck& check);

nlohmann::json to_json(const TheoremCheck& check);

struct HarnessTolerances {
  double absolute = 1e-9;
  /// multiplicative slack on a sampled right-hand side
  double sampling_slack = 0.05;
};

// ---------------------------------------------------------------------------

struct LipschitzFromBlochInputs {
  SampledMap f;
  const DiscretizedDomain* domain = nullptr;
  WeightField w;
  Majorant phi = Majorant::power(1.0);
  CurveFamily family;
  /// M of the integral condition ∫_γ w ≤ M φ(‖x − y‖)
  double M = 1.0;
  std::span<const PointPair> condition_pairs;
  std::span<const PointPair> pairs;
  std::span<const Point> bloch_points;
  DilatationOptions dilatation{};
};

/// ‖f‖_{Λ^φ} ≤ M ‖f‖_{B_w}. Throws PreconditionError when the integral
/// condition with M fails on the condition pairs.
TheoremCheck verify_lipschitz_from_bloch(const LipschitzFromBlochInputs& in, const HarnessTolerances& tol = {});

struct BlochFromLipschitzInputs {
  SampledMap f;
  const DiscretizedDomain* domain = nullptr;
  WeightField w;
  double alpha = 1.0;
  std::span<const PointPair> pairs;
  std::span<const Point> bloch_points;
  std::span<const Point> regularity_centers;
  DilatationOptions dilatation{};
  OscillationOptions oscillation{};
};

/// ‖f‖_{B_{φ′∘w}} ≤ A K ‖f‖_{Λ^φ} for φ = φ_α with A = (1 + 1e−6)/α and the
/// measured regular-oscillation constant K. Throws PreconditionError on an
/// infinite K.
TheoremCheck verify_bloch_from_lipschitz(const BlochFromLipschitzInputs& in, const HarnessTolerances& tol = {});

struct HardyLittlewoodInputs {
  AnalyticMapPtr f;
  const DiscretizedDomain* domain = nullptr;
  /// uniformity constant of the domain
  double c = 2.0;
  double alpha = 0.5;
  std::span<const Point> grid;
  std::span<const PointPair> pairs;
};

/// Returns {C′ ≤ (2c/α) C, C ≤ C′}, with C = max over the grid of
/// ‖df(z)‖ d(z, ∂D)^{1−α} and C′ the sampled φ_α seminorm.
std::vector<TheoremCheck> verify_hardy_littlewood_uniform(const HardyLittlewoodInputs& in,
                                                          const HarnessTolerances& tol = {});

/// Certificate of d_{w^{β−1}}(x, y) ≤ M_β ‖x − y‖^β on sampled pairs. Every
/// distance is the cheapest of a grid-graph path and the curves of the family,
/// hence an upper bound on d_{w^{β−1}}.
struct WeightedDistanceCertificate {
  double beta = 0.0;
  double M = 0.0;
  std::size_t pair_count = 0;
  double worst_ratio = 0.0;
  Point witness_x;
  Point witness_y;
  bool pass() const noexcept { return pair_count > 0 && worst_ratio <= 1.0; }
};

nlohmann::json to_json(const WeightedDistanceCertificate& c);

WeightedDistanceCertificate certify_weighted_distance(const DiscretizedDomain& domain,
                                                      const WeightField& w, double beta, double M,
                                                      const CurveFamily& family,
                                                      std::span<const PointPair> pairs,
                                                      bool use_grid = true);

struct MainTheoremInputs {
  SampledMap f;
  const DiscretizedDomain* domain = nullptr;
  SetDescriptor A = OriginSet{};
  double p = 1.0;
  double alpha = 0.5;
  WeightField w;
  /// M_β for β = α/p
  double M_beta = 1.0;
  CurveFamily family;
  bool grid_certificate = true;
  std::span<const PointPair> certificate_pairs;
  std::span<const PointPair> pairs;
  std::span<const Point> centers;
  LocalSamplingOptions local{};
  OscillationOptions oscillation{};
};

/// ‖f‖_{Λ^{α/p}} ≤ M_{α/p} K ‖g‖_{Λ^α_w}^{1/p}, g = d(f, A)^p, K measured.
TheoremCheck verify_main_theorem(const MainTheoremInputs& in, const HarnessTolerances& tol = {});

/// Constant of the corollaries from its parts: M_β = 2 · (2c/β) for the ½d
/// weight, K = 1, β = α/p. Throws Error if it differs from the closed form
/// 4c/α (p = 1) or 8c/α (p = 2) by more than 1e−12.
double corollary_constant(double c, double alpha, double p);

struct DyakonovInputs {
  AnalyticMapPtr f;
  const DiscretizedDomain* domain = nullptr;
  double c = 2.0;
  double alpha = 0.5;
  std::span<const PointPair> pairs;
  std::span<const Point> centers;
  LocalSamplingOptions local{};
};

/// ‖f‖_{Λ^α} ≤ (4c/α) ‖|f|‖_{Λ^α_loc} for scalar f.
TheoremCheck verify_dyakonov_dim1(const DyakonovInputs& in, const HarnessTolerances& tol = {});

/// ‖f‖_{Λ^{α/2}} ≤ (8c/α) ‖‖f‖²‖_{Λ^α_loc}^{1/2} for f into dimension ≥ 2.
TheoremCheck verify_dyakonov_higher(const DyakonovInputs& in, const HarnessTolerances& tol = {});

/// |d(f(x), A) − d(f(y), A)| ≤ d(f(x), f(y)) on every pair, to 1e−12.
TheoremCheck triangle_remark_check(const SampledMap& f, const SetDescriptor& A,
                                   std::span<const PointPair> pairs);

}  // namespace hlab
