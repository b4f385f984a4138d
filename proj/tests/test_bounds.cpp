#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "hfp/bounds.hpp"
#include "hfp/error.hpp"

using namespace hfp;
using cd = std::complex<double>;

TEST_CASE("Gauss remainder bounds") {
  CHECK(gauss_remainder_bound(GaussBoundVariant::Hunter, 2.0, 1.0, 2.0, 3) == 0.25);
  CHECK(std::abs(gauss_remainder_bound(GaussBoundVariant::Kambo, 2.0, 1.0, 2.0, 3) - 5 * std::numbers::pi / 128) <= 1e-14);
  CHECK(gauss_remainder_bound(GaussBoundVariant::Hunter, 2.0, 0.0, 2.0, 3) == 0.0);
}

TEST_CASE("Gauss bounds shrink with m and rho; Kambo is sharper for rho >= 2") {
  for (double rho : {2.0, 3.0, 5.0}) {
    double prev = 1e300;
    for (int m = 1; m <= 30; ++m) {
      const double h = gauss_remainder_bound(GaussBoundVariant::Hunter, rho, 1.0, 2.0, m);
      const double k = gauss_remainder_bound(GaussBoundVariant::Kambo, rho, 1.0, 2.0, m);
      CHECK(h < prev);
      CHECK(k < h);
      prev = h;
    }
  }
  CHECK(gauss_remainder_bound(GaussBoundVariant::Hunter, 3.0, 1.0, 2.0, 5) <
        gauss_remainder_bound(GaussBoundVariant::Hunter, 2.0, 1.0, 2.0, 5));
}

TEST_CASE("Gauss bound errors") {
  CHECK_THROWS_AS((void)gauss_remainder_bound(GaussBoundVariant::Kambo, 1.4, 1.0, 2.0, 3), DomainError);
  CHECK_THROWS_AS((void)gauss_remainder_bound(GaussBoundVariant::Kambo, 2.0, 1.0, 2.0, 3, 0.5, 0.0), DomainError);
  CHECK_THROWS_AS((void)gauss_remainder_bound(GaussBoundVariant::Hunter, 1.0, 1.0, 2.0, 3), DomainError);
  CHECK_THROWS_AS((void)gauss_remainder_bound(GaussBoundVariant::Hunter, 2.0, 1.0, 2.0, 0), ParameterError);
}

TEST_CASE("interpolation remainder bound") {
  const double e = std::numbers::e;
  CHECK(interp_remainder_bound(e, e, 8, 0) == doctest::Approx(2 * e * std::pow(1.25, 8) / 40320.0).epsilon(1e-14));
  CHECK(interp_remainder_bound(e, e, 8, 0) == doctest::Approx(8.04e-4).epsilon(1e-3));
  CHECK(interp_remainder_bound(0.0, 0.0, 9, 3) == 0.0);
  CHECK(interp_remainder_bound(1.0, 1.0, 4, 0) == doctest::Approx(0.421875).epsilon(1e-15));
  CHECK(interp_remainder_bound(1.0, 1.0, 4, 0, InterpBase::NPlusOne) == doctest::Approx(2 * std::pow(1.4, 4) / 24).epsilon(1e-15));
  CHECK_THROWS_AS((void)interp_remainder_bound(1.0, 1.0, 2, 2), ParameterError);
}

TEST_CASE("combined bound") {
  const BoundReport r = quadrature_error_bound(2.0, 1.0, 3, 0.0, 0.0, 0.0, 0.0, 5, 0);
  CHECK(r.total == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(r.interp_term == 0.0);
  const BoundReport j = quadrature_error_bound(2.0, 1.0, 3, 1.0, 0.0, 0.0, 0.0, 5, 0);
  CHECK(j.gauss_term == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(total_bound(0.5, 0.25) == 0.75);
  CHECK_THROWS_AS((void)quadrature_error_bound(2.0, 1.0, 3, -1.0, 0.0, 0.0, 0.0, 5, 0), DomainError);
}

TEST_CASE("maximum on an ellipse") {
  CHECK(max_on_ellipse([](cd) { return cd(1.0); }, {3.0, 256}) == doctest::Approx(1.0));
  CHECK(max_on_ellipse([](cd z) { return z; }, {2.0, 256}) == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(max_on_ellipse([](cd z) { return std::exp(z); }, {2.0, 256}) == doctest::Approx(std::exp(1.25)).epsilon(1e-12));
  CHECK(max_on_ellipse([](cd z) { return z * z; }, {2.0, 64}) == doctest::Approx(1.5625).epsilon(1e-12));
  CHECK_THROWS_AS((void)max_on_ellipse([](cd) { return cd(1.0); }, {1.0, 256}), ParameterError);
  CHECK_THROWS_AS((void)max_on_ellipse([](cd) { return cd(1.0); }, {2.0, 32}), ParameterError);
  CHECK_THROWS_AS((void)max_on_ellipse([](cd z) { return 1.0 / (z - 1.25); }, {2.0, 256}), NumericalError);
}

TEST_CASE("rho grid and ellipse parameter") {
  const auto g = rho_grid(std::numeric_limits<double>::infinity());
  REQUIRE(g.size() == 16);
  CHECK(g.front() == doctest::Approx(1.05));
  CHECK(g.back() == doctest::Approx(9.5));
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] / g[i - 1] == doctest::Approx(g[1] / g[0]));
  const double rs = ellipse_parameter(cd(1.1, 0.0));
  CHECK(rs == doctest::Approx(1.1 + std::sqrt(0.21)));
  CHECK(ellipse_parameter(cd(0.0, 5.0)) == doctest::Approx(5.0 + std::sqrt(26.0)));
  CHECK(rho_grid(rs).back() == doctest::Approx(0.95 * rs));
  CHECK_THROWS_AS((void)rho_grid(1.0), DomainError);
}

TEST_CASE("rho scan keeps the smallest total") {
  const ComplexFunction g = [](cd z) { return std::exp(z); };
  const RhoScan s = scan_rho(g, std::numeric_limits<double>::infinity(), 7, 0.0, 0.0, std::numbers::e, std::numbers::e, 8, 0);
  REQUIRE(!s.all.empty());
  for (const BoundReport& r : s.all) CHECK(s.best.total <= r.total);
  CHECK(s.best.m_estimated);
  const RhoScan o = scan_rho(g, 4.0, 7, 0.0, 0.0, 1.0, 1.0, 8, 0, GaussBoundVariant::Hunter, InterpBase::N, 10.0);
  CHECK(!o.best.m_estimated);
  CHECK(o.best.inputs.M == 10.0);
}
