#include "hlab/theorem_harness.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "hlab/errors.hpp"
#include "hlab/weighted_distance.hpp"

namespace hlab {
namespace {

const DiscretizedDomain& require_domain(const DiscretizedDomain* d) {
  if (!d) throw InvalidInput("theorem check: no domain given");
  return *d;
}

nlohmann::json witness_pair(const SeminormEstimate& e) {
  return {{"x", e.witness_x}, {"y", e.witness_y}};
}

BiasAnnotation sampled_both_sides(const HarnessTolerances& tol) {
  return {true, true, tol.sampling_slack, ""};
}

/// Estimators accept any φ; theorem checks need a genuine majorant (rules out t^α, α > 1).
void require_majorant(const Majorant& phi) {
  if (!majorant_validate(phi, geometric_grid(1e-6, 10.0, 200)).valid())
    throw PreconditionError("'" + phi.name() + "' is not a majorant (phi' must be nonincreasing)");
}

void require_normalized(const AnalyticMap& f) {
  const double sup = ball_sup_norm(f).value;
  if (sup > 1.0 + kUnitBoundRoundoff)
    throw PreconditionError("map is not bounded by 1 on the ball (sup " + std::to_string(sup) + ")");
}

}  // namespace

bool bias_policy_ok(const BiasAnnotation& bias) {
  if (!bias.rhs_sampled_lower_bound) return true;
  return bias.slack > 0.0 || !bias.waiver.empty();
}

void finalize(TheoremCheck& check) {
  if (!bias_policy_ok(check.bias))
    throw InvalidInput("check '" + check.name +
                       "': sampled right-hand side without slack or waiver");
  check.rhs = check.constant * check.rhs_measured * (1.0 + check.bias.slack);
}

nlohmann::json to_json(const TheoremCheck& c) {
  nlohmann::json j = {{"name", c.name},
                      {"statement", c.statement},
                      {"inputs", c.inputs},
                      {"lhs", c.lhs},
                      {"rhs_measured", c.rhs_measured},
                      {"constant", c.constant},
                      {"rhs", c.rhs},
                      {"margin", c.margin()},
                      {"tolerance", c.tolerance},
                      {"bias",
                       {{"lhs_sampled_lower_bound", c.bias.lhs_sampled_lower_bound},
                        {"rhs_sampled_lower_bound", c.bias.rhs_sampled_lower_bound},
                        {"slack", c.bias.slack},
                        {"waiver", c.bias.waiver}}},
                      {"measurements", c.measurements},
                      {"witness", c.witness},
                      {"pass", c.pass()}};
  if (c.errored) j["error"] = c.error;
  return j;
}

TheoremCheck verify_lipschitz_from_bloch(const LipschitzFromBlochInputs& in, const HarnessTolerances& tol) {
  const auto& domain = require_domain(in.domain);
  require_majorant(in.phi);
  IntegralConditionOptions io;
  io.tolerance = 1e-9;
  const auto cert = weight_condition_check(domain, in.w.value, in.phi, in.family, in.M,
                                           in.condition_pairs, io);
  if (!cert.pass())
    throw PreconditionError("integral condition with M = " + std::to_string(in.M) +
                            " not certified (worst ratio " + std::to_string(cert.worst_ratio) + ")");
  const auto holder = holder_seminorm(in.f, in.pairs, in.phi);
  const auto bloch = bloch_norm(in.f, in.w, domain, in.bloch_points, in.dilatation);

  TheoremCheck c;
  c.name = "lipschitz_from_bloch";
  c.statement = "||f||_Lip(phi) <= M ||f||_Bloch(w)";
  c.inputs = {{"map", in.f.label}, {"domain", domain.describe()}, {"weight", in.w.label},
              {"majorant", in.phi.name()}, {"M", in.M}, {"pairs", in.pairs.size()},
              {"bloch_points", in.bloch_points.size()}};
  c.lhs = holder.value;
  c.constant = in.M;
  c.rhs_measured = bloch.value;
  c.tolerance = tol.absolute;
  c.bias = sampled_both_sides(tol);
  c.measurements = {{"holder", to_json(holder)}, {"bloch", to_json(bloch)},
                    {"integral_condition", to_json(cert)}};
  c.witness = witness_pair(holder);
  finalize(c);
  return c;
}

TheoremCheck verify_bloch_from_lipschitz(const BlochFromLipschitzInputs& in, const HarnessTolerances& tol) {
  const auto& domain = require_domain(in.domain);
  if (!(in.alpha > 0.0)) throw InvalidInput("alpha must be positive");
  const Majorant phi = Majorant::power(in.alpha);
  const double A = (1.0 + 1e-6) / in.alpha;
  const auto diag = majorant_validate(phi, geometric_grid(1e-6, 10.0, 200));
  if (!diag.valid()) throw PreconditionError("'" + phi.name() + "' is not a majorant");
  if (!diag.satisfies_growth_condition(A))
    throw PreconditionError("majorant does not satisfy phi(t)/t < A phi'(t) with A = " + std::to_string(A));

  const auto K = regular_oscillation_constant(in.f, in.w, domain, in.regularity_centers, in.oscillation);
  if (K.infinite) throw PreconditionError("regular oscillation constant is infinite");

  const WeightField base = in.w;
  const double alpha = in.alpha;
  const WeightField dw = WeightField::custom(
      "phi'(" + in.w.label + ")", [base, alpha](const Point& x) { return alpha * std::pow(base(x), alpha - 1.0); });
  const auto bloch = bloch_norm(in.f, dw, domain, in.bloch_points, in.dilatation);
  const auto holder = holder_seminorm(in.f, in.pairs, phi);

  TheoremCheck c;
  c.name = "bloch_from_lipschitz";
  c.statement = "||f||_Bloch(phi'(w)) <= A K ||f||_Lip(phi)";
  c.inputs = {{"map", in.f.label}, {"domain", domain.describe()}, {"weight", in.w.label},
              {"alpha", in.alpha}, {"pairs", in.pairs.size()}, {"bloch_points", in.bloch_points.size()},
              {"regularity_centers", in.regularity_centers.size()}};
  c.lhs = bloch.value;
  c.constant = A * K.K;
  c.rhs_measured = holder.value;
  c.tolerance = tol.absolute;
  c.bias = sampled_both_sides(tol);
  c.measurements = {{"A", A}, {"K", to_json(K)}, {"bloch", to_json(bloch)},
                    {"holder", to_json(holder)}, {"majorant", to_json(diag)}};
  c.witness = {{"x", bloch.witness}};
  finalize(c);
  return c;
}

std::vector<TheoremCheck> verify_hardy_littlewood_uniform(const HardyLittlewoodInputs& in,
                                                          const HarnessTolerances& tol) {
  const auto& domain = require_domain(in.domain);
  if (!(in.alpha > 0.0 && in.alpha < 1.0)) throw InvalidInput("alpha must lie in (0, 1)");
  double C = 0.0;
  Point C_witness;
  for (const Point& z : in.grid) {
    if (!domain.contains(z)) throw InvalidInput("Hardy-Littlewood: grid point outside the domain");
    const double v = operator_norm(in.f->differential(to_complex(z))) *
                     std::pow(domain.boundary_distance(z), 1.0 - in.alpha);
    if (v > C || C_witness.empty()) {
      C = std::max(C, v);
      C_witness = z;
    }
  }
  const auto holder = holder_seminorm(as_sampled_map(in.f), in.pairs, Majorant::power(in.alpha));
  const nlohmann::json inputs = {{"map", in.f->label()}, {"domain", domain.describe()}, {"c", in.c},
                                 {"alpha", in.alpha}, {"grid_points", in.grid.size()},
                                 {"pairs", in.pairs.size()}};
  const nlohmann::json meas = {{"C_grid", C}, {"C_grid_witness", C_witness}, {"C_prime", to_json(holder)}};

  TheoremCheck upper;
  upper.name = "hardy_littlewood_upper";
  upper.statement = "C' <= (2c/alpha) C";
  upper.inputs = inputs;
  upper.lhs = holder.value;
  upper.constant = 2.0 * in.c / in.alpha;
  upper.rhs_measured = C;
  upper.tolerance = tol.absolute;
  upper.bias = {true, true, 0.0,
                "C is the grid maximum of an exact derivative expression; no sampling slack is applied"};
  upper.measurements = meas;
  upper.witness = witness_pair(holder);
  finalize(upper);

  TheoremCheck lower;
  lower.name = "hardy_littlewood_lower";
  lower.statement = "C <= C'";
  lower.inputs = inputs;
  lower.lhs = C;
  lower.constant = 1.0;
  lower.rhs_measured = holder.value;
  lower.tolerance = tol.absolute;
  lower.bias = sampled_both_sides(tol);
  lower.measurements = meas;
  lower.witness = {{"x", C_witness}};
  finalize(lower);
  return {upper, lower};
}

nlohmann::json to_json(const WeightedDistanceCertificate& c) {
  return {{"beta", c.beta},           {"M", c.M},
          {"pair_count", c.pair_count}, {"worst_ratio", c.worst_ratio},
          {"witness_x", c.witness_x}, {"witness_y", c.witness_y},
          {"pass", c.pass()}};
}

WeightedDistanceCertificate certify_weighted_distance(const DiscretizedDomain& domain,
                                                      const WeightField& w, double beta, double M,
                                                      const CurveFamily& family,
                                                      std::span<const PointPair> pairs, bool use_grid) {
  WeightedDistanceCertificate cert;
  cert.beta = beta;
  cert.M = M;
  const WeightField v = power_of(w, beta - 1.0);
  std::map<Point, std::unique_ptr<GridDistanceField>> fields;
  for (const auto& pr : pairs) {
    const double t = distance(pr.x, pr.y);
    if (t == 0.0) continue;
    double best = std::numeric_limits<double>::infinity();
    if (family) best = weighted_distance(domain, v, pr.x, pr.y, CurveFamilyStrategy{family, {}}).value;
    if (use_grid) {
      try {
        auto& field = fields[pr.x];
        if (!field) field = std::make_unique<GridDistanceField>(domain, v, pr.x);
        best = std::min(best, field->to(pr.y));
      } catch (const InvalidInput&) {
        // point outside the grid margin; the curve family still bounds it
      } catch (const NoPathError&) {
      }
    }
    if (!std::isfinite(best)) throw NoPathError("weighted distance certificate: no path for a pair");
    const double ratio = best / (M * std::pow(t, beta));
    ++cert.pair_count;
    if (ratio > cert.worst_ratio || cert.witness_x.empty()) {
      cert.worst_ratio = std::max(cert.worst_ratio, ratio);
      cert.witness_x = pr.x;
      cert.witness_y = pr.y;
    }
  }
  return cert;
}

TheoremCheck verify_main_theorem(const MainTheoremInputs& in, const HarnessTolerances& tol) {
  const auto& domain = require_domain(in.domain);
  if (!(in.p >= 1.0)) throw InvalidInput("p must be at least 1");
  if (!(in.alpha > 0.0)) throw InvalidInput("alpha must be positive");
  const double beta = in.alpha / in.p;
  require_majorant(Majorant::power(in.alpha));
  const auto cert = certify_weighted_distance(domain, in.w, beta, in.M_beta, in.family,
                                              in.certificate_pairs, in.grid_certificate);
  if (!cert.pass())
    throw PreconditionError("weighted distance condition with M_beta = " + std::to_string(in.M_beta) +
                            " not certified (worst ratio " + std::to_string(cert.worst_ratio) + ")");
  const auto K = p_regular_constant(in.f, in.w, domain, in.A, in.p, in.centers, in.oscillation);
  if (K.infinite) throw PreconditionError("p-regularity constant is infinite");

  const SampledMap g = modulus_power_function(in.f, in.A, in.p);
  const auto local = local_holder_seminorm(g, in.w, domain, in.centers, Majorant::power(in.alpha), in.local);
  const auto holder = holder_seminorm(in.f, in.pairs, Majorant::power(beta));

  TheoremCheck c;
  c.name = "main_theorem";
  c.statement = "||f||_Lip(alpha/p) <= M_beta K ||d(f,A)^p||_loc(alpha)^(1/p)";
  c.inputs = {{"map", in.f.label}, {"domain", domain.describe()}, {"set", describe(in.A)},
              {"p", in.p}, {"alpha", in.alpha}, {"weight", in.w.label}, {"M_beta", in.M_beta},
              {"pairs", in.pairs.size()}, {"centers", in.centers.size()},
              {"certificate_pairs", in.certificate_pairs.size()}};
  c.lhs = holder.value;
  c.constant = in.M_beta * K.K;
  c.rhs_measured = std::pow(local.value, 1.0 / in.p);
  c.tolerance = tol.absolute;
  c.bias = sampled_both_sides(tol);
  c.measurements = {{"K", to_json(K)}, {"local", to_json(local)}, {"holder", to_json(holder)},
                    {"certificate", to_json(cert)}};
  c.witness = witness_pair(holder);
  finalize(c);
  return c;
}

double corollary_constant(double c, double alpha, double p) {
  const double beta = alpha / p;
  // d_{w^{β−1}} for w = ½d is 2^{1−β} ≤ 2 times the lemma's integral bound 2c/β.
  const double M_beta = 2.0 * (2.0 * c / beta);
  const double K = 1.0;
  const double constant = M_beta * K;
  double closed = 4.0 * c * p / alpha;
  if (p == 1.0) closed = 4.0 * c / alpha;
  if (p == 2.0) closed = 8.0 * c / alpha;
  if (std::abs(constant - closed) > 1e-12 * closed)
    throw Error("corollary constant from parts disagrees with the closed form");
  return constant;
}

namespace {

TheoremCheck dyakonov(const DyakonovInputs& in, const HarnessTolerances& tol, double p) {
  const auto& domain = require_domain(in.domain);
  require_normalized(*in.f);
  const double constant = corollary_constant(in.c, in.alpha, p);
  const SampledMap F = as_sampled_map(in.f);
  const SampledMap g = modulus_power_function(F, OriginSet{}, p);
  const auto local = local_holder_seminorm(g, WeightField::half_boundary_distance(domain), domain,
                                           in.centers, Majorant::power(in.alpha), in.local);
  const auto holder = holder_seminorm(F, in.pairs, Majorant::power(in.alpha / p));

  TheoremCheck c;
  c.name = p == 1.0 ? "dyakonov_scalar" : "dyakonov_vector";
  c.statement = p == 1.0 ? "||f||_Lip(alpha) <= (4c/alpha) || |f| ||_loc(alpha)"
                         : "||f||_Lip(alpha/2) <= (8c/alpha) || |f|^2 ||_loc(alpha)^(1/2)";
  c.inputs = {{"map", in.f->label()}, {"domain", domain.describe()}, {"c", in.c},
              {"alpha", in.alpha}, {"pairs", in.pairs.size()}, {"centers", in.centers.size()}};
  c.lhs = holder.value;
  c.constant = constant;
  c.rhs_measured = std::pow(local.value, 1.0 / p);
  c.tolerance = tol.absolute;
  c.bias = sampled_both_sides(tol);
  c.measurements = {{"local", to_json(local)}, {"holder", to_json(holder)}};
  c.witness = witness_pair(holder);
  finalize(c);
  return c;
}

}  // namespace

TheoremCheck verify_dyakonov_dim1(const DyakonovInputs& in, const HarnessTolerances& tol) {
  if (!in.f || in.f->target_dim() != 1) throw InvalidInput("scalar corollary needs a scalar map");
  return dyakonov(in, tol, 1.0);
}

TheoremCheck verify_dyakonov_higher(const DyakonovInputs& in, const HarnessTolerances& tol) {
  if (!in.f || in.f->target_dim() < 2) throw InvalidInput("vector corollary needs range dimension ≥ 2");
  return dyakonov(in, tol, 2.0);
}

TheoremCheck triangle_remark_check(const SampledMap& f, const SetDescriptor& A,
                                   std::span<const PointPair> pairs) {
  double worst = -std::numeric_limits<double>::infinity();
  nlohmann::json witness = nlohmann::json::object();
  for (const auto& pr : pairs) {
    const Point fx = f(pr.x), fy = f(pr.y);
    const double excess = std::abs(distance_to_set(fx, A, f.range_norm) - distance_to_set(fy, A, f.range_norm)) -
                          f.range_distance(fx, fy);
    if (excess > worst) {
      worst = excess;
      witness = {{"x", pr.x}, {"y", pr.y}};
    }
  }
  TheoremCheck c;
  c.name = "triangle_remark";
  c.statement = "|d(f(x),A) - d(f(y),A)| - d(f(x),f(y)) <= 0";
  c.inputs = {{"map", f.label}, {"set", describe(A)}, {"pairs", pairs.size()}};
  c.lhs = pairs.empty() ? 0.0 : worst;
  c.constant = 1.0;
  c.rhs_measured = 0.0;
  c.tolerance = 1e-12;
  c.witness = witness;
  finalize(c);
  return c;
}

}  // namespace hlab
