#include <doctest.h>

#include <cmath>
#include <memory>

#include "hlab/errors.hpp"
#include "hlab/moebius_ball.hpp"

using namespace hlab;

namespace {

CVector random_in_ball(std::size_t m, Rng& rng, double max_radius = 0.999) {
  CVector z(m);
  for (auto& c : z) c = {rng.normal(), rng.normal()};
  const double r = max_radius * std::pow(rng.uniform(), 1.0 / (2.0 * m));
  return cscale(z, r / cnorm(z));
}

CVector with_norm(std::size_t m, double r, Rng& rng) {
  if (r == 0.0) return CVector(m, Complex(0.0));
  CVector z(m);
  for (auto& c : z) c = {rng.normal(), rng.normal()};
  return cscale(z, r / cnorm(z));
}

// Cauchy integral for the j-th column of the differential: (1/2π) ∫ F(z + ρ e^{iθ} e_j) e^{−iθ}/ρ dθ
LinearOperator cauchy_differential(const std::function<CVector(const CVector&)>& F, const CVector& z,
                                   std::size_t m, double rho = 0.05, int nodes = 64) {
  LinearOperator J(m, z.size());
  for (std::size_t j = 0; j < z.size(); ++j)
    for (int k = 0; k < nodes; ++k) {
      const Complex e = std::polar(1.0, 2.0 * M_PI * k / nodes);
      CVector p = z;
      p[j] += rho * e;
      const CVector v = F(p);
      for (std::size_t i = 0; i < m; ++i) J(i, j) += v[i] / (rho * e) / static_cast<double>(nodes);
    }
  return J;
}

}  // namespace

TEST_CASE("closed-form values") {
  Rng rng(31);
  for (std::size_t m : {1u, 2u, 5u}) {
    const CVector a = random_in_ball(m, rng);
    const MoebiusTransform T(a);
    const CVector at0 = T.apply(CVector(m, Complex(0.0)));
    CHECK(cnorm(csub(at0, a)) <= 1e-12);

    const MoebiusTransform T0(CVector(m, Complex(0.0)));
    const CVector z = random_in_ball(m, rng);
    CHECK(cnorm(cadd(T0.apply(z), z)) <= 1e-15);
    CHECK(T0.s() == 1.0);
  }
}

TEST_CASE("involution and ball preservation") {
  Rng rng(32);
  for (std::size_t m : {1u, 2u, 5u})
    for (int i = 0; i < 1000; ++i) {
      const MoebiusTransform T(random_in_ball(m, rng));
      const CVector z = random_in_ball(m, rng);
      const CVector w = T.apply(z);
      CHECK(cnorm(w) < 1.0);
      CHECK(cnorm(csub(T.apply(w), z)) <= 1e-10);
    }
}

TEST_CASE("projector algebra") {
  Rng rng(33);
  for (std::size_t m : {1u, 2u, 3u, 5u})
    for (int i = 0; i < 50; ++i) {
      const MoebiusTransform T(random_in_ball(m, rng));
      const auto& P = T.P_matrix();
      const auto& Q = T.Q_matrix();
      CHECK(P.compose(P).max_abs_diff(P) <= 1e-12);
      CHECK(Q.compose(Q).max_abs_diff(Q) <= 1e-12);
      CHECK(P.compose(Q).max_abs_diff(LinearOperator::zero(m, m)) <= 1e-12);
      CHECK(T.s() > 0.0);
      CHECK(T.s() <= 1.0);
    }
  // in ℂ¹, P_a = Id for a ≠ 0 and P_0 = 0
  CHECK(MoebiusTransform(CVector{{0.3, 0.2}}).P_matrix().max_abs_diff(LinearOperator::identity(1)) <= 1e-15);
  CHECK(MoebiusTransform(CVector{{0.0, 0.0}}).P_matrix().max_abs_diff(LinearOperator::zero(1, 1)) == 0.0);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(MoebiusTransform(CVector{{1.0, 0.0}}), DomainError);
  const MoebiusTransform T(CVector{{0.5, 0.0}, {0.0, 0.0}});
  CHECK_THROWS_AS(T.apply({{0.8, 0.0}, {0.6, 0.0}}), DomainError);
}

TEST_CASE("differential at zero") {
  const MoebiusTransform T0(CVector(3, Complex(0.0)));
  CHECK(T0.differential_at_zero().max_abs_diff(LinearOperator::identity(3).scaled(-1.0)) == 0.0);
  CHECK(operator_norm(MoebiusTransform(CVector{{0.6, 0.0}}).differential_at_zero()) == doctest::Approx(0.64));
  CHECK(operator_norm(MoebiusTransform(CVector{{0.6, 0.0}, {0.0, 0.0}, {0.0, 0.0}}).differential_at_zero()) ==
        doctest::Approx(0.8));
}

TEST_CASE("norm split across |a|") {
  Rng rng(34);
  for (std::size_t m : {1u, 2u, 3u, 5u})
    for (int k = 0; k <= 19; ++k) {
      const double r = k <= 9 ? 0.1 * k : 0.95;
      if (k > 10) continue;
      const MoebiusTransform T(with_norm(m, r, rng));
      const double expected = m == 1 ? 1.0 - r * r : std::sqrt(1.0 - r * r);
      CHECK(std::abs(operator_norm(T.differential_at_zero()) - expected) <= 1e-8);
    }
}

TEST_CASE("general differential matches a Cauchy-integral oracle") {
  Rng rng(35);
  for (std::size_t m : {1u, 2u, 4u})
    for (int i = 0; i < 10; ++i) {
      const MoebiusTransform T(random_in_ball(m, rng, 0.9));
      const CVector z = random_in_ball(m, rng, 0.5);
      const auto oracle = cauchy_differential([&](const CVector& p) { return T.apply(p); }, z, m);
      CHECK(T.differential(z).max_abs_diff(oracle) <= 1e-10);
    }
  const MoebiusTransform T(CVector{{0.2, 0.1}, {-0.3, 0.0}});
  const CVector zero(2, Complex(0.0));
  CHECK(T.differential(zero).max_abs_diff(T.differential_at_zero()) <= 1e-15);
  // involution: dφ_a(a) dφ_a(0) = Id
  CHECK(T.differential(T.center()).compose(T.differential_at_zero()).max_abs_diff(LinearOperator::identity(2)) <=
        1e-12);
}

TEST_CASE("Schwarz-Pick on simple maps") {
  const auto id = schwarz_pick_check(PolynomialMap::identity(2));
  CHECK(id.df0_norm == doctest::Approx(1.0));
  CHECK(id.bound == doctest::Approx(1.0));
  CHECK(id.pass());

  const auto c = schwarz_pick_check(PolynomialMap::constant(2, {{0.3, 0.0}, {0.0, 0.4}}));
  CHECK(c.df0_norm == 0.0);
  CHECK(c.pass());

  CHECK_THROWS_AS(schwarz_pick_check(PolynomialMap::identity(1).scaled(2.0)), PreconditionError);
}

TEST_CASE("Schwarz-Pick battery on random quadratic maps") {
  Rng rng(36);
  double worst = INFINITY, worst_chain = INFINITY;
  for (int i = 0; i < 200; ++i) {
    const auto f = normalize_on_ball(random_polynomial(2, 2, 2, rng)).map;
    const auto rep = schwarz_pick_check(f);
    worst = std::min(worst, rep.slack);
    worst_chain = std::min(worst_chain, rep.chain_slack);
  }
  CHECK(worst >= -1e-9);
  CHECK(worst_chain >= -1e-9);
}
