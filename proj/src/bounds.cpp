#include "hfp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "hfp/error.hpp"

namespace hfp {

namespace {

std::complex<double> ellipse_point(double rho, double theta) {
  const double major = 0.5 * (rho + 1.0 / rho);
  const double minor = 0.5 * (rho - 1.0 / rho);
  return {major * std::cos(theta), minor * std::sin(theta)};
}

double jacobi_mass(double alpha, double beta) {
  return std::exp2(alpha + beta + 1.0) * std::tgamma(alpha + 1.0) * std::tgamma(beta + 1.0) /
         std::tgamma(alpha + beta + 2.0);
}

}  // namespace

double gauss_remainder_bound(GaussBoundVariant variant, double rho, double M, double mass, int m,
                             double alpha, double beta) {
  if (m < 1) throw ParameterError("gauss_remainder_bound: m must be positive");
  if (!(M >= 0.0)) throw DomainError("gauss_remainder_bound: M must be non-negative");
  if (variant == GaussBoundVariant::Kambo) {
    if (alpha != 0.0 || beta != 0.0) {
      throw DomainError("Kambo bound applies to the Legendre weight only");
    }
    if (!(rho > std::numbers::sqrt2)) throw DomainError("Kambo bound needs rho > sqrt(2)");
    return std::numbers::pi * M * (rho * rho + 1.0) / (std::pow(rho, 2 * m) * (rho * rho - 2.0));
  }
  if (!(rho > 1.0)) throw DomainError("Hunter bound needs rho > 1");
  if (!(mass >= 0.0)) throw DomainError("gauss_remainder_bound: mass must be non-negative");
  return 4.0 * M * mass / (std::pow(rho, 2 * m - 1) * (rho - 1.0));
}

double interp_remainder_bound(double M1, double M2, int n, int p, InterpBase base) {
  if (p < 0) throw ParameterError("interp_remainder_bound: p must be non-negative");
  if (n <= p) throw ParameterError("interp_remainder_bound: need n > p");
  if (!(M1 >= 0.0) || !(M2 >= 0.0)) throw DomainError("interp_remainder_bound: M1, M2 must be non-negative");
  const double sum = M1 + M2;
  if (sum == 0.0) return 0.0;
  const double denom = base == InterpBase::N ? n : n + 1.0;
  const double log_value = std::log(sum) - std::lgamma(p + 1.0) - std::lgamma(n - p + 1.0) +
                           (n - p) * std::log1p((p + 2.0) / denom);
  return std::exp(log_value);
}

double total_bound(double gauss_term, double interp_term) { return gauss_term + interp_term; }

BoundReport quadrature_error_bound(double rho, double M, int m, double alpha, double beta, double M1,
                            double M2, int n, int p, GaussBoundVariant variant, InterpBase base) {
  if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("quadrature_error_bound: need alpha, beta > -1");
  BoundReport r;
  r.gauss_term = gauss_remainder_bound(variant, rho, M, jacobi_mass(alpha, beta), m, alpha, beta);
  r.interp_term = interp_remainder_bound(M1, M2, n, p, base);
  r.total = total_bound(r.gauss_term, r.interp_term);
  r.inputs = {rho, M, M1, M2, m, n, p, alpha, beta};
  r.variant = variant;
  r.base = base;
  return r;
}

double max_on_ellipse(const ComplexFunction& f, const EllipseSpec& spec) {
  if (!(spec.rho > 1.0)) throw ParameterError("max_on_ellipse: rho must exceed 1");
  if (spec.samples < 64) throw ParameterError("max_on_ellipse: at least 64 samples required");
  const int count = spec.samples;
  std::vector<double> values(static_cast<std::size_t>(count));
  const double dtheta = 2.0 * std::numbers::pi / count;

#pragma omp parallel for schedule(static)
  for (int j = 0; j < count; ++j) {
    values[static_cast<std::size_t>(j)] = std::abs(f(ellipse_point(spec.rho, j * dtheta)));
  }
  for (int j = 0; j < count; ++j) {
    if (!std::isfinite(values[static_cast<std::size_t>(j)])) {
      std::ostringstream msg;
      msg << "max_on_ellipse: integrand not finite at z = " << ellipse_point(spec.rho, j * dtheta);
      throw NumericalError(msg.str());
    }
  }
  const auto it = std::max_element(values.begin(), values.end());
  const int j = static_cast<int>(it - values.begin());
  double best = *it;

  auto modulus = [&](double theta) {
    const double v = std::abs(f(ellipse_point(spec.rho, theta)));
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "max_on_ellipse: integrand not finite at z = " << ellipse_point(spec.rho, theta);
      throw NumericalError(msg.str());
    }
    return v;
  };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = (j - 1) * dtheta;
  double hi = (j + 1) * dtheta;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = modulus(x1);
  double f2 = modulus(x2);
  for (int it2 = 0; it2 < 60 && hi - lo > 1e-12; ++it2) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = modulus(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = modulus(x1);
    }
  }
  return std::max({best, f1, f2});
}

std::vector<double> rho_grid(double rho_sing) {
  if (!(rho_sing > 1.0)) throw DomainError("rho_grid: singularity ellipse parameter must exceed 1");
  const double top = 0.95 * std::min(rho_sing, 10.0);
  const double bottom = 1.05;
  if (!(top > bottom)) throw DomainError("rho_grid: singularity too close to [-1, 1]");
  std::vector<double> grid(16);
  const double ratio = std::pow(top / bottom, 1.0 / 15.0);
  double r = bottom;
  for (double& g : grid) {
    g = r;
    r *= ratio;
  }
  grid.back() = top;
  return grid;
}

double ellipse_parameter(std::complex<double> z0) {
  const std::complex<double> root = std::sqrt(z0 * z0 - 1.0);
  return std::max(std::abs(z0 + root), std::abs(z0 - root));
}

RhoScan scan_rho(const ComplexFunction& g, double rho_sing, int m, double alpha, double beta,
                 double M1, double M2, int n, int p, GaussBoundVariant variant, InterpBase base,
                 std::optional<double> M_override, int samples) {
  RhoScan scan;
  for (double rho : rho_grid(rho_sing)) {
    if (variant == GaussBoundVariant::Kambo && !(rho > std::numbers::sqrt2)) continue;
    const double M = M_override ? *M_override : max_on_ellipse(g, {rho, samples});
    BoundReport r = quadrature_error_bound(rho, M, m, alpha, beta, M1, M2, n, p, variant, base);
    r.m_estimated = !M_override.has_value();
    scan.all.push_back(r);
  }
  if (scan.all.empty()) throw DomainError("scan_rho: no admissible rho in the grid");
  scan.best = *std::min_element(scan.all.begin(), scan.all.end(),
                                [](const BoundReport& x, const BoundReport& y) { return x.total < y.total; });
  return scan;
}

}  // namespace hfp
