#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hfp/error.hpp"
#include "hfp/specialfn.hpp"
#include "oracle/oracles.hpp"

using namespace hfp;

TEST_CASE("Ei reference values") {
  CHECK(exponential_integral(1.0) == doctest::Approx(1.8951178163559368).epsilon(1e-15));
  CHECK(exponential_integral(-1.0) == doctest::Approx(-0.21938393439552026).epsilon(1e-15));
  const double x = 1e-8;
  CHECK(std::abs(exponential_integral(x) - std::log(x) - static_cast<double>(kEulerGamma)) <= 1e-7);
  CHECK_THROWS_AS((void)exponential_integral(0.0), DomainError);
}

TEST_CASE("Ei against the high-precision oracle") {
  for (double x = -60.0; x <= 80.0; x += 0.37) {
    if (std::abs(x) < 1e-9) continue;
    const double ref = oracle::ei_extended(x);
    CHECK(std::abs(exponential_integral(x) - ref) <= 1e-14 * std::abs(ref) + 1e-300);
  }
  for (double x : {-1e-3, 2e-6, 0.4999, 39.999, 40.001, -5.999, -6.001}) {
    const double ref = oracle::ei_extended(x);
    CHECK(std::abs(exponential_integral(x) - ref) <= 1e-14 * std::abs(ref));
  }
}

TEST_CASE("series and continued fraction agree on the overlap") {
  for (double x = -8.0; x <= -4.0; x += 0.125) {
    const double s = detail::ei_series(x);
    CHECK(std::abs(s - detail::ei_continued_fraction(x)) <= 1e-12 * std::abs(s));
  }
  for (double x = 38.0; x <= 45.0; x += 0.5) {
    const double s = detail::ei_series(x);
    CHECK(std::abs(s - detail::ei_asymptotic(x)) <= 1e-12 * std::abs(s));
  }
}

TEST_CASE("exact references") {
  CHECK(exact_reference(Example::I1, {0.0, 0, 0.0}).value == doctest::Approx(2.114501750751457).epsilon(1e-15));
  CHECK(exact_reference(Example::I2, {1e-5, 1, 0.0}).value == doctest::Approx(-0.757450528292818).epsilon(1e-14));
  const double lam = 5.0;
  const double i3 = std::numbers::pi * (0.0625 - 25.0) / (5.0 * std::sqrt(26.0) * 25.0625 * 25.0625);
  const ExactReference r3 = exact_reference(Example::I3, {0.25, 1, lam});
  CHECK(r3.value == doctest::Approx(i3).epsilon(1e-15));
  CHECK(r3.label == Example::I3);
  CHECK(to_string(Example::I2) == "I2");
}

TEST_CASE("I1 agrees with the exp finite-part oracle") {
  for (double xi : {-0.9, -0.4, 1e-5, 0.3, 0.75}) {
    for (int p : {0, 1}) {
      const double ref = oracle::exp_finite_part(xi, p);
      CHECK(std::abs(exact_reference(Example::I1, {xi, p, 0.0}).value - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("unsupported and invalid parameters") {
  CHECK_THROWS_AS((void)exact_reference(Example::I1, {0.1, 2, 0.0}), UnsupportedError);
  CHECK_THROWS_AS((void)exact_reference(Example::I2, {0.2, 1, 0.0}), UnsupportedError);
  CHECK_THROWS_AS((void)exact_reference(Example::I2, {1e-5, 0, 0.0}), UnsupportedError);
  CHECK_THROWS_AS((void)exact_reference(Example::I3, {0.25, 0, 5.0}), UnsupportedError);
  CHECK_THROWS_AS((void)exact_reference(Example::I3, {0.25, 1, 0.0}), DomainError);
  CHECK_THROWS_AS((void)exact_reference(Example::I1, {1.0, 0, 0.0}), DomainError);
}
