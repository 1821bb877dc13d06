#include "hlab/analytic_maps.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hlab/errors.hpp"

namespace hlab {
namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

// pw[i][k] = z_i^k
std::vector<CVector> power_table(const CVector& z, int degree) {
  std::vector<CVector> pw(z.size(), CVector(static_cast<std::size_t>(degree) + 1, Complex(1.0)));
  for (std::size_t i = 0; i < z.size(); ++i)
    for (int k = 1; k <= degree; ++k) pw[i][k] = pw[i][k - 1] * z[i];
  return pw;
}

void enumerate_exponents(std::size_t n, int remaining, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
  if (current.size() == n) {
    out.push_back(current);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    current.push_back(e);
    enumerate_exponents(n, remaining - e, current, out);
    current.pop_back();
  }
}

}  // namespace

PolynomialMap::PolynomialMap(std::size_t source_dim, std::vector<std::vector<Monomial>> components,
                             std::string label)
    : n_(source_dim), label_(std::move(label)) {
  if (n_ == 0 || n_ > kMaxDimension) throw InvalidInput("polynomial: source dimension outside 1..5");
  if (components.empty() || components.size() > kMaxDimension)
    throw InvalidInput("polynomial: target dimension outside 1..5");
  for (auto& comp : components) {
    std::map<std::vector<int>, Complex> merged;
    for (const auto& m : comp) {
      if (m.exponents.size() != n_) throw InvalidInput("polynomial: exponent vector has the wrong length");
      int total = 0;
      for (int e : m.exponents) {
        if (e < 0) throw InvalidInput("polynomial: negative exponent");
        total += e;
      }
      if (total > kMaxDegree) throw InvalidInput("polynomial: total degree above 6");
      if (!finite(m.coefficient)) throw InvalidInput("polynomial: non-finite coefficient");
      merged[m.exponents] += m.coefficient;
    }
    std::vector<Monomial> clean;
    for (auto& [e, c] : merged) {
      if (c == Complex(0.0)) continue;
      int total = 0;
      for (int k : e) total += k;
      degree_ = std::max(degree_, total);
      clean.push_back({e, c});
    }
    components_.push_back(std::move(clean));
  }
}

PolynomialMap PolynomialMap::identity(std::size_t n) {
  std::vector<std::vector<Monomial>> comps(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    comps[i].push_back({e, 1.0});
  }
  return PolynomialMap(n, std::move(comps), "identity");
}

PolynomialMap PolynomialMap::constant(std::size_t source_dim, const CVector& value) {
  std::vector<std::vector<Monomial>> comps(value.size());
  for (std::size_t i = 0; i < value.size(); ++i)
    comps[i].push_back({std::vector<int>(source_dim, 0), value[i]});
  return PolynomialMap(source_dim, std::move(comps), "constant");
}

PolynomialMap PolynomialMap::linear(const LinearOperator& L) {
  std::vector<std::vector<Monomial>> comps(L.rows());
  for (std::size_t i = 0; i < L.rows(); ++i)
    for (std::size_t j = 0; j < L.cols(); ++j) {
      std::vector<int> e(L.cols(), 0);
      e[j] = 1;
      comps[i].push_back({e, L(i, j)});
    }
  return PolynomialMap(L.cols(), std::move(comps), "linear");
}

CVector PolynomialMap::evaluate(const CVector& z) const {
  if (z.size() != n_) throw InvalidInput("polynomial evaluate: dimension mismatch");
  const auto pw = power_table(z, degree_);
  CVector out(components_.size(), Complex(0.0));
  for (std::size_t c = 0; c < components_.size(); ++c)
    for (const auto& m : components_[c]) {
      Complex term = m.coefficient;
      for (std::size_t i = 0; i < n_; ++i) term *= pw[i][m.exponents[i]];
      out[c] += term;
    }
  return out;
}

LinearOperator PolynomialMap::differential(const CVector& z) const {
  if (z.size() != n_) throw InvalidInput("polynomial differential: dimension mismatch");
  const auto pw = power_table(z, degree_);
  LinearOperator J(components_.size(), n_);
  for (std::size_t c = 0; c < components_.size(); ++c)
    for (const auto& m : components_[c])
      for (std::size_t j = 0; j < n_; ++j) {
        if (m.exponents[j] == 0) continue;
        Complex term = m.coefficient * static_cast<double>(m.exponents[j]);
        for (std::size_t i = 0; i < n_; ++i)
          term *= pw[i][i == j ? m.exponents[i] - 1 : m.exponents[i]];
        J(c, j) += term;
      }
  return J;
}

PolynomialMap PolynomialMap::scaled(Complex s) const {
  auto comps = components_;
  for (auto& comp : comps)
    for (auto& m : comp) m.coefficient *= s;
  return PolynomialMap(n_, std::move(comps), label_);
}

PolynomialMap PolynomialMap::with_label(std::string label) const {
  PolynomialMap p(*this);
  p.label_ = std::move(label);
  return p;
}

nlohmann::json PolynomialMap::to_json() const {
  auto comps = nlohmann::json::array();
  for (const auto& comp : components_) {
    auto terms = nlohmann::json::array();
    for (const auto& m : comp)
      terms.push_back({{"exponents", m.exponents},
                       {"coefficient", {m.coefficient.real(), m.coefficient.imag()}}});
    comps.push_back(std::move(terms));
  }
  return {{"label", label_}, {"source_dim", n_}, {"components", comps}};
}

PolynomialMap PolynomialMap::from_json(const nlohmann::json& j) {
  try {
    std::vector<std::vector<Monomial>> comps;
    for (const auto& comp : j.at("components")) {
      std::vector<Monomial> terms;
      for (const auto& t : comp) {
        const auto& c = t.at("coefficient");
        if (!c.is_array() || c.size() != 2) throw InvalidInput("polynomial JSON: coefficient must be [re, im]");
        terms.push_back({t.at("exponents").get<std::vector<int>>(),
                         Complex(c[0].get<double>(), c[1].get<double>())});
      }
      comps.push_back(std::move(terms));
    }
    return PolynomialMap(j.at("source_dim").get<std::size_t>(), std::move(comps),
                         j.value("label", std::string("polynomial")));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("polynomial JSON: ") + e.what());
  }
}

ClosedFormMap::ClosedFormMap(std::string label, std::function<Complex(Complex)> value,
                             std::function<Complex(Complex)> derivative)
    : label_(std::move(label)), value_(std::move(value)), derivative_(std::move(derivative)) {}

ClosedFormMap ClosedFormMap::power_branch(double alpha) {
  return ClosedFormMap(
      "(1-z)^" + std::to_string(alpha),
      [alpha](Complex z) { return std::exp(alpha * std::log(1.0 - z)); },
      [alpha](Complex z) { return -alpha * std::exp((alpha - 1.0) * std::log(1.0 - z)); });
}

CVector ClosedFormMap::evaluate(const CVector& z) const {
  if (z.size() != 1) throw InvalidInput("closed-form map: scalar argument expected");
  return {value_(z[0])};
}

LinearOperator ClosedFormMap::differential(const CVector& z) const {
  if (z.size() != 1) throw InvalidInput("closed-form map: scalar argument expected");
  LinearOperator J(1, 1);
  J(0, 0) = derivative_(z[0]);
  return J;
}

PolynomialMap random_polynomial(std::size_t n, std::size_t m, int degree, Rng& rng, double box) {
  if (degree < 0 || degree > PolynomialMap::kMaxDegree) throw InvalidInput("random polynomial: degree outside 0..6");
  std::vector<std::vector<int>> exps;
  std::vector<int> cur;
  enumerate_exponents(n, degree, cur, exps);
  std::vector<std::vector<Monomial>> comps(m);
  for (auto& comp : comps)
    for (const auto& e : exps) comp.push_back({e, Complex(rng.uniform(-box, box), rng.uniform(-box, box))});
  return PolynomialMap(n, std::move(comps),
                       "random degree " + std::to_string(degree) + " C^" + std::to_string(n) + "->C^" +
                           std::to_string(m));
}

BallSup ball_sup_norm(const AnalyticMap& f, const BallSupOptions& options) {
  const std::size_t n = f.source_dim();
  SphereSearchOptions so;
  so.directions = options.directions ? options.directions : (n == 1 ? 4096 : 1024 * n);
  so.refine = true;
  so.refine_starts = options.refine_starts;
  so.seed = options.seed;
  const auto res = maximize_on_sphere(
      [&f](const Point& u) { return cnorm(f.evaluate(to_complex(u))); }, 2 * n, so);
  if (!std::isfinite(res.value)) throw EvaluationError("ball sup: map is not finite on the sphere");
  return {res.value, to_complex(res.direction)};
}

NormalizedPolynomial normalize_on_ball(const PolynomialMap& f, const BallSupOptions& options) {
  const double sup = ball_sup_norm(f, options).value;
  if (sup == 0.0) return {f, 0.0};
  return {f.scaled(1.0 / (sup * (1.0 + 1e-9))), sup};
}

SampledMap as_sampled_map(AnalyticMapPtr f) {
  const std::size_t m = f->target_dim();
  std::string label = f->label();
  return {[f = std::move(f)](const Point& x) { return to_real(f->evaluate(to_complex(x))); }, 2 * m,
          NormKind::euclidean, std::move(label)};
}

nlohmann::json to_json(const BridgeReport& r) {
  return {{"point", r.point},
          {"differential_norm", r.differential_norm},
          {"dilatation", r.dilatation},
          {"difference", r.difference},
          {"tolerance", r.tolerance},
          {"smallest_radius", r.smallest_radius},
          {"profile", to_json(r.profile)},
          {"pass", r.pass()}};
}

BridgeReport differential_norm_dilatation_bridge(AnalyticMapPtr f, const Point& z,
                                                 const DilatationOptions& options, double tolerance) {
  const double nz = norm(z);
  if (!(nz < 1.0)) throw InvalidInput("Fréchet bridge: point must lie inside the unit ball");
  BridgeReport r;
  r.point = z;
  r.tolerance = tolerance;
  r.differential_norm = operator_norm(f->differential(to_complex(z)));
  DilatationOptions o = options;
  o.admissible_radius = std::min(o.admissible_radius, 1.0 - nz);
  r.profile = upper_dilatation(as_sampled_map(std::move(f)), z, o);
  r.dilatation = r.profile.value;
  r.smallest_radius = r.profile.radii.back();
  r.difference = std::abs(r.differential_norm - r.dilatation);
  return r;
}

nlohmann::json to_json(const BoundedRegularityReport& r) {
  return {{"p", r.p},
          {"measured_sup", r.measured_sup},
          {"estimate", to_json(r.estimate)},
          {"tolerance", r.tolerance},
          {"pass", r.pass()}};
}

BoundedRegularityReport bounded_regularity_check(AnalyticMapPtr f, const DiscretizedDomain& domain,
                                                 std::span<const Point> centers,
                                                 const OscillationOptions& options, double tolerance) {
  BoundedRegularityReport r;
  r.tolerance = tolerance;
  r.measured_sup = ball_sup_norm(*f).value;
  if (r.measured_sup > 1.0 + kUnitBoundRoundoff)
    throw PreconditionError("bounded regularity: map is not bounded by 1 on the ball (sup " +
                            std::to_string(r.measured_sup) + ")");
  r.p = f->target_dim() == 1 ? 1.0 : 2.0;
  const WeightField w = WeightField::boundary_distance(domain);
  r.estimate = p_regular_constant(as_sampled_map(std::move(f)), w, domain, OriginSet{}, r.p, centers, options);
  return r;
}

}  // namespace hlab
