#pragma once

#include <functional>
#include <vector>

namespace hfp {

/// Open integration interval (a, b).
struct Interval {
  double a = -1.0;
  double b = 1.0;

  [[nodiscard]] double length() const { return b - a; }
  [[nodiscard]] double midpoint() const { return 0.5 * (a + b); }
  [[nodiscard]] bool contains(double x) const { return a < x && x < b; }
};

enum class WeightKind { Legendre, Chebyshev1, Jacobi, Custom };

/// Nodes ascending, weights positive.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  [[nodiscard]] int size() const { return static_cast<int>(nodes.size()); }
};

/// mu_q(xi) = finite-part integral of w(x) (x - xi)^{-q} over (a, b).
using MomentProvider = std::function<double(double xi, int q)>;
/// m -> m-point Gauss rule on the weight's own interval.
using RuleProvider = std::function<GaussRule(int m)>;

/// Weight function w on (a, b). The Jacobi family is
/// w(x) = (1 - t)^alpha (1 + t)^beta with t = (2x - a - b) / (b - a);
/// Legendre is (0, 0), Chebyshev of the first kind is (-1/2, -1/2).
/// Custom weights carry their own rule provider, mass and moments.
class WeightFamily {
 public:
  static WeightFamily legendre(Interval iv = {});
  static WeightFamily chebyshev1(Interval iv = {});
  static WeightFamily jacobi(double alpha, double beta, Interval iv = {});
  static WeightFamily custom(RuleProvider rule, double mass, MomentProvider moments,
                             Interval iv = {});

  /// Attach a finite-part moment provider (required for Jacobi weights
  /// other than Legendre and Chebyshev1 before they can be integrated).
  [[nodiscard]] WeightFamily with_moments(MomentProvider moments) const;

  [[nodiscard]] WeightKind kind() const { return kind_; }
  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] double beta() const { return beta_; }
  [[nodiscard]] const Interval& interval() const { return interval_; }
  [[nodiscard]] bool symmetric() const;
  [[nodiscard]] const MomentProvider& moment_provider() const { return moments_; }
  [[nodiscard]] const RuleProvider& rule_provider() const { return rule_; }
  [[nodiscard]] double custom_mass() const { return custom_mass_; }

  /// w(x) for x in (a, b); NaN for custom weights.
  [[nodiscard]] double operator()(double x) const;

 private:
  WeightFamily(WeightKind kind, double alpha, double beta, Interval iv);

  WeightKind kind_;
  double alpha_;
  double beta_;
  Interval interval_;
  MomentProvider moments_;
  RuleProvider rule_;
  double custom_mass_ = 0.0;
};

/// m-point Gauss rule for w, exact for polynomials of degree <= 2m - 1.
/// Chebyshev1 uses the cosine closed form; Legendre and Jacobi use the
/// eigenvalues of the Jacobi matrix, polished by Newton on the orthonormal
/// recurrence, with Christoffel-number weights.
[[nodiscard]] GaussRule gauss_rule(const WeightFamily& w, int m);

/// Integral of w over (a, b).
[[nodiscard]] double weight_mass(const WeightFamily& w);

namespace detail {

/// Eigenvalues and squared first eigenvector components of the symmetric
/// tridiagonal matrix with diagonal d and off-diagonal e (e[0] unused,
/// e[i] couples rows i-1 and i). Implicit-shift QL. Results sorted by
/// eigenvalue.
void tridiagonal_eigen(std::vector<double>& d, std::vector<double>& e,
                       std::vector<double>& first_components_sq);

/// Monic Jacobi recurrence coefficients on (-1, 1): alpha_k (k = 0..m-1) and
/// beta_k = b_k^2 (k = 1..m-1; beta[0] holds the mass).
void jacobi_recurrence(double alpha, double beta, int m, std::vector<double>& diag,
                       std::vector<double>& offdiag_sq);

}  // namespace detail

}  // namespace hfp
