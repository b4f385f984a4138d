#pragma once

#include <string>

namespace hfp {

/// Euler-Mascheroni constant to 20 digits.
inline constexpr long double kEulerGamma = 0.57721566490153286061L;

/// Ei(x) = PV integral of e^t / t over (-inf, x), x != 0.
/// Power series (accumulated in long double) for -6 <= x <= 40, continued
/// fraction of E1 for x < -6, asymptotic series for x > 40.
/// Throws DomainError at x = 0.
[[nodiscard]] double exponential_integral(double x);

namespace detail {
[[nodiscard]] double ei_series(double x);
/// Ei(x) = -E1(-x) for x < 0 via the modified Lentz continued fraction.
[[nodiscard]] double ei_continued_fraction(double x);
[[nodiscard]] double ei_asymptotic(double x);
}  // namespace detail

enum class Example { I1, I2, I3 };

struct ExampleParameters {
  double xi = 0.0;
  int p = 0;
  double lambda = 0.0;  // I3 only
};

/// Closed-form value of one of the three benchmark integrals.
struct ExactReference {
  Example label;
  ExampleParameters parameters;
  double value;
};

/// I1(xi; p) = FP int_{-1}^{1} e^x / (x - xi)^{p+1} dx for p in {0, 1}:
///   p = 0: [Ei(1 - xi) - Ei(-1 - xi)] e^xi,
///   p = 1: the xi-derivative of the p = 0 value.
/// I2 = FP int_{-1}^{1} (1.21 - x^2)^{-1/2} / (x - 1e-5)^2 dx (xi = 1e-5, p = 1 only).
/// I3(xi, lambda) = FP int_{-1}^{1} (x^2 + lambda^2)^{-1} (x - xi)^{-2} (1 - x^2)^{-1/2} dx (p = 1).
/// Throws UnsupportedError for parameter combinations without a closed form.
[[nodiscard]] ExactReference exact_reference(Example label, const ExampleParameters& params);

[[nodiscard]] std::string to_string(Example label);

}  // namespace hfp
