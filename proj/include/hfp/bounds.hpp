#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace hfp {

/// Hunter's bound for any Jacobi weight, or Kambo's sharper Gauss-Legendre
/// bound (valid for rho > sqrt 2).
enum class GaussBoundVariant { Hunter, Kambo };

/// Base of the interpolation term: (1 + (p+2)/n) or (1 + (p+2)/(n+1)).
enum class InterpBase { N, NPlusOne };

using ComplexFunction = std::function<std::complex<double>(std::complex<double>)>;

/// Confocal ellipse z = (rho e^{i theta} + rho^{-1} e^{-i theta}) / 2, foci +-1.
struct EllipseSpec {
  double rho = 2.0;
  int samples = 256;
};

/// Hunter: 4 M mass / (rho^{2m-1} (rho - 1)).
/// Kambo:  pi M (rho^2 + 1) / (rho^{2m} (rho^2 - 2)), Legendre only.
[[nodiscard]] double gauss_remainder_bound(GaussBoundVariant variant, double rho, double M,
                                           double mass, int m, double alpha = 0.0,
                                           double beta = 0.0);

/// (M1 + M2) / p! / (n - p)! * (1 + (p+2)/n)^{n-p}   (base N).
[[nodiscard]] double interp_remainder_bound(double M1, double M2, int n, int p,
                                            InterpBase base = InterpBase::N);

[[nodiscard]] double total_bound(double gauss_term, double interp_term);

struct BoundInputs {
  double rho = 0.0;
  double M = 0.0;
  double M1 = 0.0;
  double M2 = 0.0;
  int m = 0;
  int n = 0;
  int p = 0;
  double alpha = 0.0;
  double beta = 0.0;
};

struct BoundReport {
  double gauss_term = 0.0;
  double interp_term = 0.0;
  double total = 0.0;
  BoundInputs inputs;
  GaussBoundVariant variant = GaussBoundVariant::Hunter;
  InterpBase base = InterpBase::N;
  /// M came from sampling the ellipse (a lower estimate of the true maximum),
  /// not from a user-supplied value.
  bool m_estimated = false;
};

/// Gauss term with the Jacobi mass 2^{alpha+beta+1} G(alpha+1) G(beta+1) / G(alpha+beta+2)
/// plus the interpolation term.
[[nodiscard]] BoundReport quadrature_error_bound(double rho, double M, int m, double alpha, double beta,
                                          double M1, double M2, int n, int p,
                                          GaussBoundVariant variant = GaussBoundVariant::Hunter,
                                          InterpBase base = InterpBase::N);

/// max |f(z)| on the ellipse: uniform theta grid, then golden-section
/// refinement around the best sample. An estimate from below.
/// Throws ParameterError for rho <= 1 or fewer than 64 samples and
/// NumericalError (naming z) when f is not finite somewhere on the ellipse.
[[nodiscard]] double max_on_ellipse(const ComplexFunction& f, const EllipseSpec& spec);

/// 16 geometric points from 1.05 to 0.95 * min(rho_sing, 10).
[[nodiscard]] std::vector<double> rho_grid(double rho_sing);

/// Ellipse parameter of a singularity z0: |z0 + sqrt(z0^2 - 1)| (branch with modulus >= 1).
[[nodiscard]] double ellipse_parameter(std::complex<double> z0);

struct RhoScan {
  BoundReport best;
  std::vector<BoundReport> all;
};

/// Evaluates quadrature_error_bound over rho_grid(rho_sing) with M from
/// max_on_ellipse (or M_override) and keeps the smallest total.
[[nodiscard]] RhoScan scan_rho(const ComplexFunction& g, double rho_sing, int m, double alpha,
                               double beta, double M1, double M2, int n, int p,
                               GaussBoundVariant variant = GaussBoundVariant::Hunter,
                               InterpBase base = InterpBase::N,
                               std::optional<double> M_override = std::nullopt,
                               int samples = 256);

}  // namespace hfp
