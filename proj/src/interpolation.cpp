#include "hfp/interpolation.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include <omp.h>

#include "hfp/combinatorics.hpp"
#include "hfp/error.hpp"
#include "hfp/summation.hpp"

namespace hfp {

int NodeLayout::offset(int i) const {
  if (i == 0) return 0;
  if (i <= 2 * nu) return (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);
  return -(i - nu);
}

NodeLayout layout_nodes(double xi, Interval iv, int n) {
  if (!iv.contains(xi)) {
    std::ostringstream msg;
    msg << "singularity outside interval: xi = " << xi << " not in (" << iv.a << ", " << iv.b << ")";
    throw DomainError(msg.str());
  }
  if (n < 2) throw ParameterError("layout_nodes: n must be at least 2, got " + std::to_string(n));

  NodeLayout layout;
  layout.xi = xi;
  layout.n = n;
  layout.nu = n / 2;
  layout.interval = iv;

  const double right = iv.b - xi;
  const double left = xi - iv.a;
  double lower_bound;
  if (right <= left) {
    layout.orientation = Orientation::RightShort;
    layout.h = right / (layout.nu + 1);
    lower_bound = (iv.a - xi + n * (iv.b - xi)) / iv.length();
  } else {
    layout.orientation = Orientation::LeftShort;
    layout.h = left / (layout.nu + 1);
    lower_bound = (xi - iv.b + n * (xi - iv.a)) / iv.length();
  }
  if (!(lower_bound < layout.nu)) {
    std::ostringstream msg;
    msg << "interpolation layout infeasible for xi = " << xi << ", n = " << n
        << ": need nu > " << lower_bound << " but nu = floor(n/2) = " << layout.nu
        << "; choose a larger (even) n";
    throw ParameterError(msg.str());
  }

  const double s = layout.step();
  layout.nodes.resize(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    layout.nodes[static_cast<std::size_t>(i)] = xi + layout.offset(i) * s;
  }
  for (double a : layout.nodes) {
    if (!(iv.a < a && a < iv.b)) {
      throw ParameterError("interpolation layout places a node on the interval boundary; choose a larger n");
    }
  }
  return layout;
}

namespace {

// sum_{i != 0} offset_i^{-r} for r = 1..r_max, with the far (small) terms
// accumulated first.
std::vector<double> unit_power_sums(const NodeLayout& layout, int r_max) {
  std::vector<double> sums(static_cast<std::size_t>(r_max));
  const int short_count = layout.nu;
  const int long_count = layout.n - layout.nu;
  for (int r = 1; r <= r_max; ++r) {
    CompensatedSum<double> pos, neg;
    for (int j = short_count; j >= 1; --j) pos += std::pow(static_cast<double>(j), -r);
    for (int j = long_count; j >= 1; --j) neg += std::pow(static_cast<double>(j), -r);
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    sums[static_cast<std::size_t>(r - 1)] = pos.value() + sign * neg.value();
  }
  return sums;
}

// nu! (n-nu)! / (|o| (nu-|o|)! (n-nu+|o|)!) and its left-side analogue, with
// the alternating sign, for a node at unit offset o.
double unit_prefactor(int nu, int n, int o) {
  double ratio = 1.0;
  if (o > 0) {
    const int i = o;
    for (int t = 1; t <= i; ++t) ratio *= static_cast<double>(nu - i + t) / (n - nu + t);
    return ((i - 1) % 2 == 0 ? 1.0 : -1.0) * ratio / i;
  }
  const int i = -o;
  for (int t = 1; t <= i; ++t) ratio *= static_cast<double>(n - nu - i + t) / (nu + t);
  return (i % 2 == 0 ? 1.0 : -1.0) * ratio / i;
}

struct RowWorkspace {
  std::vector<double> args;
  std::vector<double> z;
};

void fill_row(const NodeLayout& layout, int p, std::span<const double> eta_unit, int i,
              RowWorkspace& ws, std::span<double> row) {
  const int n = layout.n;
  if (i == 0) {
    ws.z.resize(static_cast<std::size_t>(n + 1));
    cycle_index_prefix_into(eta_unit.first(static_cast<std::size_t>(n)), ws.z);
    for (int k = p + 1; k <= n; ++k) row[static_cast<std::size_t>(k - p - 1)] = ws.z[static_cast<std::size_t>(k)];
    return;
  }
  const int o = layout.offset(i);
  const double c = 1.0 / o;
  ws.args.resize(static_cast<std::size_t>(n - 1));
  double cr = 1.0;
  for (int r = 1; r <= n - 1; ++r) {
    cr *= c;
    ws.args[static_cast<std::size_t>(r - 1)] = eta_unit[static_cast<std::size_t>(r - 1)] + cr;
  }
  ws.z.resize(static_cast<std::size_t>(n));
  cycle_index_prefix_into(ws.args, ws.z);
  const double pref = unit_prefactor(layout.nu, n, o);
  for (int k = p + 1; k <= n; ++k) {
    row[static_cast<std::size_t>(k - p - 1)] = pref * ws.z[static_cast<std::size_t>(k - 1)];
  }
}

void check_table_args(const NodeLayout& layout, int p) {
  if (p < 0) throw ParameterError("coefficient_table: p must be non-negative");
  if (p >= layout.n) {
    throw ParameterError("coefficient_table: need p < n, got p = " + std::to_string(p) +
                         ", n = " + std::to_string(layout.n));
  }
}

std::vector<double> unit_eta(const NodeLayout& layout) {
  std::vector<double> eta = unit_power_sums(layout, layout.n);
  for (double& v : eta) v = -v;
  return eta;
}

}  // namespace

std::vector<double> eta_values(const NodeLayout& layout, int r_max) {
  if (r_max < 1) throw ParameterError("eta_values: r_max must be positive");
  std::vector<double> eta = unit_power_sums(layout, r_max);
  const double s = layout.step();
  for (int r = 1; r <= r_max; ++r) {
    eta[static_cast<std::size_t>(r - 1)] = -eta[static_cast<std::size_t>(r - 1)] / std::pow(s, r);
  }
  return eta;
}

CoefficientTable::CoefficientTable(NodeLayout layout, int p, std::vector<double> unit)
    : layout_(std::move(layout)), p_(p), unit_(std::move(unit)) {
  if (unit_.size() != static_cast<std::size_t>((layout_.n + 1) * (layout_.n - p_))) {
    throw ParameterError("CoefficientTable: storage size does not match (n+1) x (n-p)");
  }
}

double CoefficientTable::unit(int i, int k) const {
  if (i < 0 || i > layout_.n || k <= p_ || k > layout_.n) {
    throw ParameterError("CoefficientTable: index out of range");
  }
  return unit_[static_cast<std::size_t>(i * columns() + (k - p_ - 1))];
}

double CoefficientTable::coefficient(int i, int k) const {
  return unit(i, k) / std::pow(layout_.step(), k);
}

std::span<const double> CoefficientTable::unit_row(int i) const {
  return std::span<const double>(unit_).subspan(static_cast<std::size_t>(i * columns()),
                                                static_cast<std::size_t>(columns()));
}

CoefficientTable coefficient_table_serial(const NodeLayout& layout, int p) {
  check_table_args(layout, p);
  const int n = layout.n;
  const int cols = n - p;
  const std::vector<double> eta = unit_eta(layout);
  std::vector<double> unit(static_cast<std::size_t>((n + 1) * cols));
  RowWorkspace ws;
  for (int i = 0; i <= n; ++i) {
    fill_row(layout, p, eta, i,  ws,
             std::span<double>(unit).subspan(static_cast<std::size_t>(i * cols), static_cast<std::size_t>(cols)));
  }
  return CoefficientTable(layout, p, std::move(unit));
}

CoefficientTable coefficient_table(const NodeLayout& layout, int p) {
  check_table_args(layout, p);
  const int n = layout.n;
  const int cols = n - p;
  const std::vector<double> eta = unit_eta(layout);
  std::vector<double> unit(static_cast<std::size_t>((n + 1) * cols));
#pragma omp parallel
  {
    RowWorkspace ws;
#pragma omp for schedule(static)
    for (int i = 0; i <= n; ++i) {
      fill_row(layout, p, eta, i, ws,
               std::span<double>(unit).subspan(static_cast<std::size_t>(i * cols),
                                               static_cast<std::size_t>(cols)));
    }
  }
  return CoefficientTable(layout, p, std::move(unit));
}

double basis_derivative_oracle(std::span<const double> nodes, int i, int k, double x) {
  const int count = static_cast<int>(nodes.size());
  if (count < 1 || count > 20) throw ParameterError("basis_derivative_oracle: 1..20 nodes supported");
  if (i < 0 || i >= count) throw ParameterError("basis_derivative_oracle: node index out of range");
  if (k < 0) throw ParameterError("basis_derivative_oracle: k must be non-negative");
  for (int u = 0; u < count; ++u) {
    for (int v = u + 1; v < count; ++v) {
      if (nodes[static_cast<std::size_t>(u)] == nodes[static_cast<std::size_t>(v)]) {
        throw DomainError("basis_derivative_oracle: duplicate nodes");
      }
    }
  }
  // Monomial coefficients of prod_{j != i} (t - a_j) in u = t - x, lowest
  // degree first; the k-th coefficient is the k-th derivative at x over k!.
  using ld = long double;
  std::vector<ld> c{1.0L};
  ld denom = 1.0L;
  const ld ai = nodes[static_cast<std::size_t>(i)];
  for (int j = 0; j < count; ++j) {
    if (j == i) continue;
    const ld aj = nodes[static_cast<std::size_t>(j)];
    const ld shift = static_cast<ld>(x) - aj;
    std::vector<ld> next(c.size() + 1, 0.0L);
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d + 1] += c[d];
      next[d] += shift * c[d];
    }
    c = std::move(next);
    denom *= ai - aj;
  }
  if (k > count - 1) return 0.0;
  return static_cast<double>(c[static_cast<std::size_t>(k)] / denom);
}

double confluent_divdiff_direct(double fx, std::span<const double> derivatives, double xi, int p,
                                double x) {
  if (p < 0) throw ParameterError("confluent_divdiff_direct: p must be non-negative");
  if (derivatives.size() < static_cast<std::size_t>(p + 1)) {
    throw ParameterError("confluent_divdiff_direct: need derivatives f(xi)..f^(p)(xi)");
  }
  if (x == xi) {
    throw DomainError("confluent_divdiff_direct: x equals xi; use the surrogate or f^(p+1)(xi)/(p+1)!");
  }
  const double dx = x - xi;
  double taylor = 0.0;
  double power = 1.0;
  double factorial = 1.0;
  for (int j = 0; j <= p; ++j) {
    if (j > 0) factorial *= j;
    taylor += derivatives[static_cast<std::size_t>(j)] / factorial * power;
    power *= dx;
  }
  // power == dx^{p+1} here
  return (fx - taylor) / power;
}

double surrogate_divdiff(const CoefficientTable& table, std::span<const double> f_values, double x_c) {
  const NodeLayout& layout = table.layout();
  if (f_values.size() != static_cast<std::size_t>(layout.n + 1)) {
    throw ParameterError("surrogate_divdiff: expected " + std::to_string(layout.n + 1) +
                         " function values, got " + std::to_string(f_values.size()));
  }
  const double s = layout.step();
  const double t = (x_c - layout.xi) / s;
  const int cols = table.columns();
  CompensatedSum<double> acc;
  for (int i = 0; i <= layout.n; ++i) {
    const std::span<const double> row = table.unit_row(i);
    double poly = 0.0;
    for (int c = cols - 1; c >= 0; --c) poly = poly * t + row[static_cast<std::size_t>(c)];
    acc += f_values[static_cast<std::size_t>(i)] * poly;
  }
  return acc.value() / std::pow(s, table.p() + 1);
}

}  // namespace hfp
