#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hfp/error.hpp"
#include "hfp/moments.hpp"
#include "oracle/oracles.hpp"

using namespace hfp;

TEST_CASE("Legendre moments at xi = 0 and xi = 0.5") {
  const auto mv = finite_part_moments(WeightFamily::legendre(), 0.0, 1);
  REQUIRE(mv.values.size() == 2);
  CHECK(std::abs(mv.mu(1)) <= 1e-16);
  CHECK(mv.mu(2) == doctest::Approx(-2.0));
  CHECK(finite_part_moment(WeightFamily::legendre(), 0.5, 1) == doctest::Approx(-1.0986122886681098).epsilon(1e-15));
}

TEST_CASE("Chebyshev1 moments vanish") {
  const auto mv = finite_part_moments(WeightFamily::chebyshev1(), 0.25, 1);
  CHECK(mv.values == std::vector<double>{0.0, 0.0});
  CHECK(std::abs(oracle::excision_moment(WeightFamily::chebyshev1(), 0.25, 1)) <= 1e-10);
  CHECK(std::abs(oracle::excision_moment(WeightFamily::chebyshev1(), 0.25, 2)) <= 1e-10);
}

TEST_CASE("closed forms agree with the excision oracle") {
  for (const WeightFamily& w : {WeightFamily::legendre(), WeightFamily::legendre({-0.5, 2.0})}) {
    const Interval iv = w.interval();
    for (int j = 1; j <= 10; ++j) {
      const double xi = iv.a + j * iv.length() / 11.0;
      for (int q = 1; q <= 3; ++q) {
        CHECK(std::abs(finite_part_moment(w, xi, q) - oracle::excision_moment(w, xi, q)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("mu_{q+1} is the xi-derivative of mu_q over q") {
  const WeightFamily w = WeightFamily::legendre();
  const double step = 1e-5;
  for (double xi : {-0.7, -0.2, 0.0, 0.35, 0.8}) {
    for (int q = 1; q <= 3; ++q) {
      const double dmu = (finite_part_moment(w, xi + step, q) - finite_part_moment(w, xi - step, q)) / (2 * step);
      CHECK(std::abs(finite_part_moment(w, xi, q + 1) - dmu / q) <= 1e-6);
    }
  }
}

TEST_CASE("mu_1 is odd about the midpoint") {
  const WeightFamily w = WeightFamily::legendre({1.0, 5.0});
  for (double d : {0.1, 0.9, 1.7}) {
    CHECK(std::abs(finite_part_moment(w, 3.0 + d, 1) + finite_part_moment(w, 3.0 - d, 1)) <= 1e-13);
  }
}

TEST_CASE("Jacobi weights need a provider; providers take precedence") {
  const WeightFamily j = WeightFamily::jacobi(0.5, 0.5);
  CHECK_THROWS_AS((void)finite_part_moments(j, 0.1, 0), UnsupportedError);
  const WeightFamily jp = j.with_moments([](double xi, int q) { return xi + q; });
  const auto mv = finite_part_moments(jp, 0.1, 2);
  CHECK(mv.values == std::vector<double>{1.1, 2.1, 3.1});
}

TEST_CASE("moment errors") {
  CHECK_THROWS_AS((void)finite_part_moment(WeightFamily::legendre(), 1.0, 1), DomainError);
  CHECK_THROWS_AS((void)finite_part_moment(WeightFamily::legendre(), 0.0, 0), ParameterError);
  CHECK_THROWS_AS((void)finite_part_moments(WeightFamily::legendre(), 0.0, -1), ParameterError);
}
