#include <doctest.h>

#include <Eigen/Dense>

#include "hlab/errors.hpp"
#include "hlab/linear_operator.hpp"
#include "hlab/random.hpp"

using namespace hlab;

namespace {

LinearOperator random_operator(std::size_t m, std::size_t n, Rng& rng) {
  LinearOperator L(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) L(i, j) = {rng.normal(), rng.normal()};
  return L;
}

double svd_oracle(const LinearOperator& L) {
  Eigen::MatrixXcd M(L.rows(), L.cols());
  for (std::size_t i = 0; i < L.rows(); ++i)
    for (std::size_t j = 0; j < L.cols(); ++j) M(i, j) = L(i, j);
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(M).singularValues()(0);
}

}  // namespace

TEST_CASE("operator norm of simple operators") {
  CHECK(operator_norm(LinearOperator::identity(4)) == doctest::Approx(1.0));
  const auto D = LinearOperator::from_rows({{3.0, 0.0}, {0.0, 1.0}});
  CHECK(operator_norm(D) == doctest::Approx(3.0));
  CHECK(operator_norm(LinearOperator::zero(2, 3)) == 0.0);
}

TEST_CASE("operator norm against an SVD oracle") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng.index(6), n = 1 + rng.index(6);
    const auto L = random_operator(m, n, rng);
    CHECK(operator_norm(L) == doctest::Approx(svd_oracle(L)).epsilon(1e-8));
  }
}

TEST_CASE("adjoint and composition") {
  Rng rng(22);
  const auto L = random_operator(3, 2, rng);
  const auto R = random_operator(2, 4, rng);
  const CVector x{{0.3, -0.1}, {0.2, 0.5}}, y{{1.0, 0.0}, {0.0, 1.0}, {-0.5, 0.5}};
  const Complex lhs = inner(L.apply(x), y), rhs = inner(x, L.adjoint().apply(y));
  CHECK(std::abs(lhs - rhs) < 1e-14);

  const CVector z{{0.1, 0.2}, {0.3, 0.4}, {0.5, 0.6}, {0.7, 0.8}};
  const auto a = L.compose(R).apply(z), b = L.apply(R.apply(z));
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-14);
  CHECK(operator_norm(L.compose(R)) <= operator_norm(L) * operator_norm(R) * (1 + 1e-12));
  CHECK_THROWS_AS(R.compose(R), InvalidInput);
}

TEST_CASE("iteration budget") {
  const auto D = LinearOperator::from_rows({{1.0, 0.0}, {0.0, 0.999}});
  OperatorNormOptions o;
  o.max_iterations = 3;
  CHECK_THROWS_AS(operator_norm(D, o), ConvergenceError);
}

TEST_CASE("complex and real coordinates") {
  const CVector z{{1.0, 2.0}, {-3.0, 0.5}};
  CHECK(to_complex(to_real(z)) == z);
  CHECK(cnorm(z) == doctest::Approx(std::sqrt(1 + 4 + 9 + 0.25)));
  CHECK_THROWS_AS(to_complex(Point{1.0, 2.0, 3.0}), InvalidInput);
  CHECK_THROWS_AS(LinearOperator::from_rows({{1.0, 2.0}, {3.0}}), InvalidInput);
}
