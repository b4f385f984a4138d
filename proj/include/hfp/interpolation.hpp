#pragma once

#include <span>
#include <vector>

#include "hfp/orthogonal.hpp"

namespace hfp {

/// Which side of xi is the shorter one. The layout steps h toward the short
/// side on odd indices.
enum class Orientation { RightShort, LeftShort };

/// Equidistant interpolation nodes around the singularity:
///   a_0 = xi, a_{2i-1} = xi + i s, a_{2i} = xi - i s   (i = 1..nu),
///   a_{nu+i} = xi - i s                                 (i = nu+1..n-nu),
/// where s = +h for RightShort and s = -h for LeftShort.
struct NodeLayout {
  double xi = 0.0;
  double h = 0.0;
  int nu = 0;
  int n = 0;
  Orientation orientation = Orientation::RightShort;
  Interval interval;
  std::vector<double> nodes;

  /// Signed step s.
  [[nodiscard]] double step() const { return orientation == Orientation::RightShort ? h : -h; }
  /// Offset of node i from xi in units of the signed step (0, 1, -1, 2, -2, ...).
  [[nodiscard]] int offset(int i) const;
};

/// Builds the layout with nu = floor(n / 2) and h = (short side) / (nu + 1).
/// Throws DomainError when xi is outside the interval and ParameterError
/// when n < 2 or the node constraint (a - xi + n (b - xi)) / (b - a) < nu
/// (or its mirror) fails.
[[nodiscard]] NodeLayout layout_nodes(double xi, Interval iv, int n);

/// eta_r = -sum_{i != 0} (a_i - xi)^{-r} for r = 1..r_max.
[[nodiscard]] std::vector<double> eta_values(const NodeLayout& layout, int r_max);

/// A_i^(k) = l_i^(k)(xi) / k! for i = 0..n and k = p+1..n.
///
/// Stored in step units: unit(i, k) = A_i^(k) * s^k, which is independent of
/// h and of the orientation, so tables never overflow for large n.
class CoefficientTable {
 public:
  CoefficientTable(NodeLayout layout, int p, std::vector<double> unit);

  [[nodiscard]] const NodeLayout& layout() const { return layout_; }
  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] int n() const { return layout_.n; }
  /// Number of k columns, n - p.
  [[nodiscard]] int columns() const { return layout_.n - p_; }

  [[nodiscard]] double unit(int i, int k) const;
  [[nodiscard]] double coefficient(int i, int k) const;
  [[nodiscard]] std::span<const double> unit_row(int i) const;

 private:
  NodeLayout layout_;
  int p_;
  std::vector<double> unit_;  // row-major, (n+1) x (n-p)
};

/// Coefficients from the cycle-index recursion. Rows are independent and
/// are filled in parallel; the result is bit-identical to the serial kernel.
[[nodiscard]] CoefficientTable coefficient_table(const NodeLayout& layout, int p);

/// Single-threaded reference kernel.
[[nodiscard]] CoefficientTable coefficient_table_serial(const NodeLayout& layout, int p);

/// l_i^(k)(x) / k! by expanding prod_{j != i} (t - a_j) into monomials in
/// (t - x), in long double.
/// Test oracle; at most 20 nodes. Throws DomainError on duplicate nodes.
[[nodiscard]] double basis_derivative_oracle(std::span<const double> nodes, int i, int k, double x);

/// f[x, xi^{p+1}] = (f(x) - sum_{j<=p} f^(j)(xi) (x - xi)^j / j!) / (x - xi)^{p+1}.
/// `derivatives` holds f(xi), ..., f^(p)(xi). Throws DomainError for x == xi.
[[nodiscard]] double confluent_divdiff_direct(double fx, std::span<const double> derivatives,
                                              double xi, int p, double x);

/// L_n[x_c, xi^{p+1}] = sum_i f(a_i) sum_{k=p+1}^{n} A_i^(k) (x_c - xi)^{k-p-1}.
/// (x_c - xi)^0 is taken as 1, so x_c == xi yields the confluent limit.
[[nodiscard]] double surrogate_divdiff(const CoefficientTable& table,
                                       std::span<const double> f_values, double x_c);

}  // namespace hfp
