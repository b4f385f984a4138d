#include "hfp/specialfn.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hfp/error.hpp"
#include "hfp/summation.hpp"

namespace hfp {

namespace detail {

double ei_series(double x) {
  const long double xl = x;
  CompensatedSum<long double> acc;
  long double term = 1.0L;  // x^k / k!
  for (int k = 1; k < 400; ++k) {
    term *= xl / k;
    const long double contrib = term / k;
    acc += contrib;
    if (std::fabs(contrib) <= std::numeric_limits<long double>::epsilon() * std::fabs(acc.value())) break;
  }
  return static_cast<double>(kEulerGamma + std::log(std::fabs(xl)) + acc.value());
}

double ei_continued_fraction(double x) {
  // E1(z) = e^{-z} / (z + 1 - 1^2/(z + 3 - 2^2/(z + 5 - ...))), z = -x > 0.
  const double z = -x;
  constexpr double tiny = 1e-300;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double b = z + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) <= eps) break;
  }
  return -h * std::exp(-z);
}

double ei_asymptotic(double x) {
  // Ei(x) ~ e^x / x sum_k k! / x^k, truncated at the smallest term.
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k < 100; ++k) {
    const double next = term * k / x;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < std::numeric_limits<double>::epsilon() * sum) break;
  }
  return std::exp(x) / x * sum;
}

}  // namespace detail

double exponential_integral(double x) {
  if (x == 0.0) throw DomainError("exponential_integral: pole at x = 0");
  if (std::isnan(x)) return x;
  if (x < -6.0) return detail::ei_continued_fraction(x);
  if (x > 40.0) return detail::ei_asymptotic(x);
  return detail::ei_series(x);
}

std::string to_string(Example label) {
  switch (label) {
    case Example::I1: return "I1";
    case Example::I2: return "I2";
    case Example::I3: return "I3";
  }
  return "?";
}

ExactReference exact_reference(Example label, const ExampleParameters& params) {
  ExactReference out{label, params, 0.0};
  const double xi = params.xi;
  switch (label) {
    case Example::I1: {
      if (!(xi > -1.0 && xi < 1.0)) throw DomainError("I1: xi must lie in (-1, 1)");
      const double h0 = (exponential_integral(1.0 - xi) - exponential_integral(-1.0 - xi)) * std::exp(xi);
      if (params.p == 0) {
        out.value = h0;
      } else if (params.p == 1) {
        out.value = h0 - std::numbers::e / (1.0 - xi) - 1.0 / (std::numbers::e * (1.0 + xi));
      } else {
        throw UnsupportedError("I1: closed form available for p = 0 and p = 1 only");
      }
      return out;
    }
    case Example::I2:
      if (params.xi != 1e-5 || params.p != 1) {
        throw UnsupportedError("I2: exact value known only for xi = 1e-5, p = 1");
      }
      out.value = -0.757450528292818;
      return out;
    case Example::I3: {
      if (params.p != 1) throw UnsupportedError("I3: defined for p = 1");
      if (!(xi > -1.0 && xi < 1.0)) throw DomainError("I3: xi must lie in (-1, 1)");
      const double lam = params.lambda;
      if (!(lam > 0.0)) throw DomainError("I3: lambda must be positive");
      const double l2 = lam * lam;
      const double x2 = xi * xi;
      out.value = std::numbers::pi * (x2 - l2) / (lam * std::sqrt(l2 + 1.0) * (l2 + x2) * (l2 + x2));
      return out;
    }
  }
  return out;
}

}  // namespace hfp
