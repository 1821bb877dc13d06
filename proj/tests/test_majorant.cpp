#include <doctest.h>

#include <cmath>

#include "hlab/errors.hpp"
#include "hlab/majorant.hpp"

using namespace hlab;

TEST_CASE("power majorants") {
  const auto grid = geometric_grid(1e-6, 10.0, 200);

  const auto half = majorant_validate(Majorant::power(0.5), grid);
  CHECK(half.valid());
  // φ_α(t) / (t φ_α'(t)) = 1/α
  CHECK(half.best_growth_constant == doctest::Approx(2.0));
  CHECK(half.satisfies_growth_condition(2.0));
  CHECK_FALSE(half.satisfies_growth_condition(1.9));

  const auto one = majorant_validate(Majorant::power(1.0), grid);
  CHECK(one.valid());
  CHECK(one.best_growth_constant == doctest::Approx(1.0));

  const auto two = majorant_validate(Majorant::power(2.0), grid);
  CHECK_FALSE(two.derivative_nonincreasing);
  CHECK_FALSE(two.valid());

  CHECK_THROWS_AS(Majorant::power(0.0), InvalidInput);
  CHECK(std::isnan(Majorant::custom("log", [](double t) { return std::log1p(t); },
                                    [](double t) { return 1.0 / (1.0 + t); })
                       .alpha()));
}

TEST_CASE("custom majorant log(1+t)") {
  const auto m = Majorant::custom("log1p", [](double t) { return std::log1p(t); },
                                  [](double t) { return 1.0 / (1.0 + t); });
  const auto d = majorant_validate(m, geometric_grid(1e-3, 1e3, 100));
  CHECK(d.valid());
  // log(1+t)(1+t)/t grows without bound
  CHECK(d.best_growth_constant > 5.0);
}

TEST_CASE("grid validation") {
  const std::vector<double> bad{0.1, 0.1, 0.2};
  CHECK_THROWS_AS(majorant_validate(Majorant::power(0.5), bad), InvalidInput);
  const std::vector<double> neg{-1.0, 1.0};
  CHECK_THROWS_AS(majorant_validate(Majorant::power(0.5), neg), InvalidInput);
  const auto nan = Majorant::custom("nan", [](double) { return NAN; }, [](double) { return 1.0; });
  CHECK_THROWS_AS(majorant_validate(nan, geometric_grid(0.1, 1.0, 5)), EvaluationError);
}
