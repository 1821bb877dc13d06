#pragma once

// Möbius transforms of the unit ball of ℂᵐ and the Schwarz–Pick estimate.

#include <json.hpp>

#include "hlab/analytic_maps.hpp"
#include "hlab/linear_operator.hpp"

namespace hlab {

/// φ_a(z) = (a − P_a z − s_a Q_a z) / (1 − ⟨z, a⟩), s_a = √(1 − ‖a‖²),
/// P_a z = ⟨z, a⟩ a / ⟨a, a⟩ (P_0 = 0), Q_a = Id − P_a.
class MoebiusTransform {
 public:
  /// Throws DomainError unless ‖a‖ < 1.
  explicit MoebiusTransform(CVector a);

  const CVector& center() const noexcept { return a_; }
  double s() const noexcept { return s_; }
  std::size_t dimension() const noexcept { return a_.size(); }

  /// Throws DomainError unless ‖z‖ < 1.
  CVector apply(const CVector& z) const;
  CVector P(const CVector& z) const;
  CVector Q(const CVector& z) const;
  const LinearOperator& P_matrix() const noexcept { return P_; }
  const LinearOperator& Q_matrix() const noexcept { return Q_; }

  /// −s_a² P_a − s_a Q_a
  LinearOperator differential_at_zero() const;
  /// dφ_a(z) = −(P_a + s_a Q_a)/D + N aᴴ/D², N = a − (P_a + s_a Q_a) z, D = 1 − ⟨z, a⟩.
  LinearOperator differential(const CVector& z) const;

 private:
  CVector a_;
  double s_;
  LinearOperator P_;
  LinearOperator Q_;
};

struct SchwarzPickReport {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  double measured_sup = 0.0;
  double f0_norm = 0.0;
  double df0_norm = 0.0;
  /// 1 − ‖f(0)‖² for m = 1, √(1 − ‖f(0)‖²) otherwise
  double bound = 0.0;
  double slack = 0.0;
  // f = φ_a ∘ g with a = f(0): ‖df(0)‖ ≤ ‖dφ_a(0)‖ ‖dg(0)‖
  double dphi_norm = 0.0;
  double dg_norm = 0.0;
  double chain_slack = 0.0;
  double tolerance = 1e-9;

  bool pass() const noexcept { return slack >= -tolerance && chain_slack >= -tolerance; }
};

nlohmann::json to_json(const SchwarzPickReport& r);

/// Throws PreconditionError if the measured sup of ‖f‖ on the ball exceeds 1.
SchwarzPickReport schwarz_pick_check(const AnalyticMap& f, const BallSupOptions& options = {});

}  // namespace hlab
