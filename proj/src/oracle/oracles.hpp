#pragma once

// Reference computations that share no numerical path with the library:
// adaptive quadrature, epsilon-excision, exact polynomial algebra and
// extended-precision series.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hfp/orthogonal.hpp"

namespace hfp::oracle {

/// Adaptive Gauss-Kronrod (61 points) on a smooth integrand.
double integrate_smooth(const std::function<double(double)>& g, double a, double b);

/// tanh-sinh on (a, b); tolerates integrable endpoint singularities.
double integrate_endpoint_singular(const std::function<double(double)>& g, double a, double b);

/// Integral of w(x) x^d over the weight's interval, by tanh-sinh.
double weighted_monomial_integral(const WeightFamily& w, int d);

/// Finite-part moment by symmetric epsilon-excision, divergent boundary terms
/// removed, Richardson-extrapolated in epsilon. Legendre and Chebyshev1
/// (the latter integrated in theta = arccos x) on (-1, 1) or any (a, b) for Legendre.
double excision_moment(const WeightFamily& w, double xi, int q);

/// FP int_a^b x^d (x - xi)^{-q} dx by expanding x^d about xi and integrating
/// each power exactly (long double).
double polynomial_finite_part(int d, double xi, int q, double a, double b);

/// FP int_{-1}^{1} e^x / (x - xi)^{p+1} dx, p in {0, 1}: the Taylor-subtracted
/// remainder integrated adaptively plus the analytic power moments.
double exp_finite_part(double xi, int p);

/// Ei(x) from gamma + ln|x| + sum x^k / (k k!) in 50-digit arithmetic.
double ei_extended(double x);

/// Omega^(k)(x) / k! for Omega(y) = prod_i (y - a_i), by expanding the
/// product in powers of (y - x).
double omega_taylor_coefficient(std::span<const double> nodes, int k, double x);

/// One line of the acceptance report.
struct Check {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs acceptance criterion `id` (1..11).
Check run_check(int id);

/// Criteria 1..11 in order.
std::vector<Check> run_all_checks();

}  // namespace hfp::oracle
