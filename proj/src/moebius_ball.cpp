#include "hlab/moebius_ball.hpp"

#include <cmath>

#include "hlab/errors.hpp"

namespace hlab {
namespace {

LinearOperator projector(const CVector& a) {
  const double aa = inner(a, a).real();
  if (aa == 0.0) return LinearOperator::zero(a.size(), a.size());
  return LinearOperator::outer(a, a).scaled(1.0 / aa);
}

}  // namespace

MoebiusTransform::MoebiusTransform(CVector a)
    : a_(std::move(a)),
      s_(0.0),
      P_(projector(a_.empty() ? CVector{0.0} : a_)),
      Q_(LinearOperator::identity(a_.empty() ? 1 : a_.size()).minus(P_)) {
  if (a_.empty()) throw InvalidInput("Möbius transform: empty center");
  const double na = cnorm(a_);
  if (!(na < 1.0)) throw DomainError("Möbius transform: center must satisfy ‖a‖ < 1");
  s_ = std::sqrt(1.0 - na * na);
}

CVector MoebiusTransform::P(const CVector& z) const { return P_.apply(z); }
CVector MoebiusTransform::Q(const CVector& z) const { return Q_.apply(z); }

CVector MoebiusTransform::apply(const CVector& z) const {
  if (z.size() != a_.size()) throw InvalidInput("Möbius transform: dimension mismatch");
  if (!(cnorm(z) < 1.0)) throw DomainError("Möbius transform: argument must satisfy ‖z‖ < 1");
  const Complex den = 1.0 - inner(z, a_);
  const CVector num = csub(csub(a_, P(z)), cscale(Q(z), s_));
  return cscale(num, 1.0 / den);
}

LinearOperator MoebiusTransform::differential_at_zero() const {
  return P_.scaled(-s_ * s_).minus(Q_.scaled(s_));
}

LinearOperator MoebiusTransform::differential(const CVector& z) const {
  if (z.size() != a_.size()) throw InvalidInput("Möbius transform: dimension mismatch");
  if (!(cnorm(z) < 1.0)) throw DomainError("Möbius transform: argument must satisfy ‖z‖ < 1");
  const LinearOperator B = P_.plus(Q_.scaled(s_));
  const Complex D = 1.0 - inner(z, a_);
  const CVector N = csub(a_, B.apply(z));
  return B.scaled(-1.0 / D).plus(LinearOperator::outer(N, a_).scaled(1.0 / (D * D)));
}

nlohmann::json to_json(const SchwarzPickReport& r) {
  return {{"source_dim", r.source_dim}, {"target_dim", r.target_dim}, {"measured_sup", r.measured_sup},
          {"f0_norm", r.f0_norm},       {"df0_norm", r.df0_norm},     {"bound", r.bound},
          {"slack", r.slack},           {"dphi_norm", r.dphi_norm},   {"dg_norm", r.dg_norm},
          {"chain_slack", r.chain_slack}, {"tolerance", r.tolerance}, {"pass", r.pass()}};
}

SchwarzPickReport schwarz_pick_check(const AnalyticMap& f, const BallSupOptions& options) {
  SchwarzPickReport r;
  r.source_dim = f.source_dim();
  r.target_dim = f.target_dim();
  r.measured_sup = ball_sup_norm(f, options).value;
  if (r.measured_sup > 1.0 + kUnitBoundRoundoff)
    throw PreconditionError("Schwarz-Pick: map is not bounded by 1 on the ball (sup " +
                            std::to_string(r.measured_sup) + ")");
  const CVector zero(f.source_dim(), Complex(0.0));
  const CVector a = f.evaluate(zero);
  const LinearOperator df0 = f.differential(zero);
  r.f0_norm = cnorm(a);
  r.df0_norm = operator_norm(df0);
  const double q = 1.0 - r.f0_norm * r.f0_norm;
  r.bound = r.target_dim == 1 ? q : std::sqrt(std::max(q, 0.0));
  r.slack = r.bound - r.df0_norm;
  if (r.f0_norm < 1.0) {
    const MoebiusTransform phi(a);
    r.dphi_norm = operator_norm(phi.differential_at_zero());
    r.dg_norm = operator_norm(phi.differential(a).compose(df0));
    r.chain_slack = r.dphi_norm * r.dg_norm - r.df0_norm;
  }
  return r;
}

}  // namespace hlab
