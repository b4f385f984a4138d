#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hfp/bounds.hpp"
#include "hfp/combinatorics.hpp"
#include "hfp/engine.hpp"
#include "hfp/error.hpp"
#include "hfp/harness.hpp"
#include "hfp/integrands.hpp"
#include "hfp/interpolation.hpp"
#include "hfp/moments.hpp"
#include "hfp/specialfn.hpp"
#include "oracle/oracles.hpp"

namespace hfp::oracle {

namespace {

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

struct Tally {
  bool ok = true;
  std::ostringstream text;
  void expect(bool cond, const std::string& label, double value, double limit) {
    ok = ok && cond;
    if (text.tellp() > 0) text << "; ";
    text << label << '=' << sci(value) << (cond ? " ok vs " : " FAILS vs ") << sci(limit);
  }
  void expect_le(const std::string& label, double value, double limit) {
    expect(value <= limit, label, value, limit);
  }
};

double hfp_error(const std::string& fn, const FunctionParams& params, const WeightFamily& w, double xi,
                 int p, int m, int n) {
  const BuiltinIntegrand f = make_builtin(fn, params);
  const double exact = builtin_exact(fn, params, w, xi, p).value();
  return std::abs(evaluate_hfp(f.integrand, w, xi, p, m, n).value - exact);
}

Check table1() {
  Tally t;
  const WeightFamily w = WeightFamily::legendre();
  t.expect_le("p0 m7 n8", hfp_error("exp", {}, w, 1e-5, 0, 7, 8), 5e-9);
  t.expect_le("p0 m7 n12", hfp_error("exp", {}, w, 1e-5, 0, 7, 12), 1e-12);
  t.expect_le("p1 m15 n12", hfp_error("exp", {}, w, 1e-5, 1, 15, 12), 1e-12);
  return {1, "table1 reproduction", t.ok, t.text.str()};
}

Check table2() {
  Tally t;
  const WeightFamily w = WeightFamily::legendre();
  const FunctionParams params{{"c", 1.21}};
  const BuiltinIntegrand f = make_builtin("inv-sqrt-pole", params);
  const double xi = 1e-5;
  const double exact = exact_reference(Example::I2, {xi, 1, 0.0}).value;
  const std::pair<int, double> targets[] = {{15, 1e-6}, {33, 1e-11}, {45, 1e-12}};
  for (auto [m, limit] : targets) {
    const SearchResult s =
        search_optimal_n(f.integrand, w, xi, 1, m, std::max(2, m - 10), m + 10, SearchCriterion::Reference, exact);
    t.expect_le("hfp m" + std::to_string(m) + " n" + std::to_string(s.n_hat), std::abs(s.best.value - exact), limit);
  }
  const double base3 = std::abs(evaluate_baseline(f.integrand, w, xi, 1, 3) - exact);
  t.expect(base3 >= 3.926e-3 && base3 <= 3.926e-1, "baseline m3 in [3.9e-3,3.9e-1]", base3, 3.926e-1);
  for (int m : {21, 27, 33, 39, 45}) {
    const double e = std::abs(evaluate_baseline(f.integrand, w, xi, 1, m) - exact);
    t.expect(e > 1e-7, "baseline m" + std::to_string(m) + " (must stay > 1e-7)", e, 1e-7);
  }
  return {2, "table2 reproduction", t.ok, t.text.str()};
}

Check table3() {
  Tally t;
  const WeightFamily w = WeightFamily::chebyshev1();
  t.expect_le("lambda5 m6 n12", hfp_error("rational-pole", {{"lambda", 5.0}}, w, 0.25, 1, 6, 12), 1e-12);
  t.expect_le("lambda2.5 m6 n10", hfp_error("rational-pole", {{"lambda", 2.5}}, w, 0.25, 1, 6, 10), 1e-9);
  t.expect_le("lambda1.5 m12 n21", hfp_error("rational-pole", {{"lambda", 1.5}}, w, 0.25, 1, 12, 21), 1e-10);
  return {3, "table3 reproduction", t.ok, t.text.str()};
}

Check fig1() {
  Tally t;
  const std::vector<ResultRow> rows = run_experiment(preset(ExperimentKind::Fig1).front());
  double worst = 0.0;
  bool all_ok = true;
  for (const ResultRow& r : rows) {
    if (r.status != "ok" || !r.abs_error) {
      all_ok = false;
      continue;
    }
    worst = std::max(worst, *r.abs_error);
  }
  t.expect(all_ok, "rows evaluated", static_cast<double>(rows.size()), static_cast<double>(rows.size()));
  t.expect_le("max error over " + std::to_string(rows.size()) + " xi", worst, 1e-6);
  return {4, "fig1 uniformity", t.ok, t.text.str()};
}

Check coefficients() {
  Tally t;
  double worst = 0.0;
  int layouts = 0;
  int skipped = 0;
  for (double xi : {0.0, 0.25, -0.4}) {
    for (int n = 2; n <= 12; ++n) {
      NodeLayout layout;
      try {
        layout = layout_nodes(xi, Interval{}, n);
      } catch (const ParameterError&) {
        ++skipped;
        continue;
      }
      for (int p = 0; p <= 2 && p < n; ++p) {
        ++layouts;
        const CoefficientTable table = coefficient_table(layout, p);
        for (int k = p + 1; k <= n; ++k) {
          std::vector<double> ref(static_cast<std::size_t>(n + 1));
          double column = 0.0;
          for (int i = 0; i <= n; ++i) {
            ref[static_cast<std::size_t>(i)] = basis_derivative_oracle(layout.nodes, i, k, xi);
            column = std::max(column, std::abs(ref[static_cast<std::size_t>(i)]));
          }
          // Entries that vanish by symmetry are compared against 1e-13 of the column scale.
          for (int i = 0; i <= n; ++i) {
            const double r = ref[static_cast<std::size_t>(i)];
            const double scale = std::max(std::abs(r), 1e-3 * column);
            worst = std::max(worst, std::abs(table.coefficient(i, k) - r) / scale);
          }
        }
      }
    }
  }
  t.expect_le("max relative deviation over " + std::to_string(layouts) + " tables (" +
                  std::to_string(skipped) + " infeasible layouts)",
              worst, 1e-10);
  return {5, "coefficient oracle equivalence", t.ok, t.text.str()};
}

Check cycle_index() {
  Tally t;
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  double worst_rec = 0.0;
  for (int n = 0; n <= 10; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> x(static_cast<std::size_t>(n));
      for (double& v : x) v = unif(rng);
      const double rec = cycle_index_prefix(x).back();
      const double exp = cycle_index_explicit(x);
      worst_rec = std::max(worst_rec, std::abs(rec - exp) / (1.0 + std::abs(exp)));
    }
  }
  t.expect_le("recursion vs partitions", worst_rec, 1e-12);

  double worst_ones = 0.0;
  for (int n = 0; n <= 20; ++n) {
    const std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
    for (double z : cycle_index_prefix(ones)) worst_ones = std::max(worst_ones, std::abs(z - 1.0));
    if (n <= kMaxEnumeratedDegree) worst_ones = std::max(worst_ones, std::abs(cycle_index_explicit(ones) - 1.0));
  }
  t.expect_le("Z_n(1..1) - 1", worst_ones, 1e-14);

  double worst_identity = 0.0;
  std::uniform_real_distribution<double> pos(-1.0, 1.0);
  std::uniform_int_distribution<int> size(3, 8);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> nodes(static_cast<std::size_t>(size(rng)));
    for (double& v : nodes) v = pos(rng);
    auto separation = [&](double x) {
      double d = INFINITY;
      for (double a : nodes) d = std::min(d, std::abs(x - a));
      return d;
    };
    double x = pos(rng);
    while (separation(x) < 0.1) x = pos(rng);
    const int n = static_cast<int>(nodes.size());
    std::vector<double> neg_s(static_cast<std::size_t>(n));
    for (int r = 1; r <= n; ++r) {
      double s = 0.0;
      for (double a : nodes) s += std::pow(a - x, -r);
      neg_s[static_cast<std::size_t>(r - 1)] = -s;
    }
    const std::vector<double> z = cycle_index_prefix(neg_s);
    const double omega = omega_taylor_coefficient(nodes, 0, x);
    for (int k = 0; k <= n; ++k) {
      const double ref = omega_taylor_coefficient(nodes, k, x);
      const double got = omega * z[static_cast<std::size_t>(k)];
      worst_identity = std::max(worst_identity, std::abs(got - ref) / std::abs(ref));
    }
  }
  t.expect_le("Omega^(k)/k! vs Omega Z_k(-S)", worst_identity, 1e-10);
  return {6, "cycle-index identities", t.ok, t.text.str()};
}

Check polynomial_exactness() {
  Tally t;
  const WeightFamily w = WeightFamily::legendre();
  double worst = 0.0;
  int cases = 0;
  for (int m : {3, 5}) {
    for (int p : {0, 1}) {
      for (double xi : {0.0, 0.3}) {
        for (int d = 0; d <= 2 * m + p; ++d) {
          const BuiltinIntegrand f = make_builtin("monomial", {{"d", static_cast<double>(d)}});
          const double ref = polynomial_finite_part(d, xi, p + 1, -1.0, 1.0);
          // Odd n is infeasible when xi is the interval midpoint; step to the next valid n.
          auto valid_n = [&](int n) {
            for (;; ++n) {
              try {
                (void)layout_nodes(xi, Interval{}, n);
                return n;
              } catch (const ParameterError&) {
              }
            }
          };
          const int n0 = valid_n(std::max({d, p + 1, 2}));
          for (int n : {n0, valid_n(n0 + 3)}) {
            const double got = evaluate_hfp(f.integrand, w, xi, p, m, n).value;
            worst = std::max(worst, std::abs(got - ref));
            ++cases;
          }
        }
      }
    }
  }
  t.expect_le("max error over " + std::to_string(cases) + " cases", worst, 1e-10);
  return {7, "polynomial exactness", t.ok, t.text.str()};
}

Check moments() {
  Tally t;
  const WeightFamily leg = WeightFamily::legendre();
  const WeightFamily cheb = WeightFamily::chebyshev1();
  double worst_leg = 0.0;
  double worst_cheb = 0.0;
  for (int j = 0; j < 10; ++j) {
    const double xi = -0.85 + j * 0.19;
    for (int q = 1; q <= 3; ++q) {
      worst_leg = std::max(worst_leg, std::abs(finite_part_moment(leg, xi, q) - excision_moment(leg, xi, q)));
      worst_cheb = std::max(worst_cheb, std::abs(excision_moment(cheb, xi, q)));
      worst_cheb = std::max(worst_cheb, std::abs(finite_part_moment(cheb, xi, q)));
    }
  }
  t.expect_le("Legendre closed form vs excision", worst_leg, 1e-8);
  t.expect_le("Chebyshev1 |excision|", worst_cheb, 1e-10);
  return {8, "moments", t.ok, t.text.str()};
}

Check bound_sanity() {
  Tally t;
  const WeightFamily w = WeightFamily::legendre();
  const double err = hfp_error("exp", {}, w, 1e-5, 0, 7, 8);
  const BuiltinIntegrand f = make_builtin("exp");
  const double M = max_on_ellipse(f.integrand.complex_value, EllipseSpec{3.0, 256});
  const BoundReport rep = quadrature_error_bound(3.0, M, 7, 0.0, 0.0, std::numbers::e, std::numbers::e, 8, 0);
  t.expect(rep.total >= err, "measured error (<= bound " + sci(rep.total) + ")", err, rep.total);
  const double hunter = gauss_remainder_bound(GaussBoundVariant::Hunter, 2.0, 1.0, 2.0, 3);
  t.expect(hunter == 0.25, "|Hunter - 0.25|", std::abs(hunter - 0.25), 0.0);
  const double kambo = gauss_remainder_bound(GaussBoundVariant::Kambo, 2.0, 1.0, 2.0, 3);
  t.expect_le("|Kambo - 5pi/128|", std::abs(kambo - 5.0 * std::numbers::pi / 128.0), 1e-14);
  return {9, "bound sanity", t.ok, t.text.str()};
}

Check special_functions() {
  Tally t;
  for (double x : {1.0, -1.0}) {
    const double ref = ei_extended(x);
    t.expect_le("Ei(" + sci(x) + ") rel", std::abs(exponential_integral(x) - ref) / std::abs(ref), 1e-13);
  }
  double worst = 0.0;
  for (double xi : {1e-5, 0.3, -0.6}) {
    const double exact = exact_reference(Example::I1, {xi, 0, 0.0}).value;
    worst = std::max(worst, std::abs(exact - exp_finite_part(xi, 0)));
  }
  t.expect_le("I1 vs subtracted integral", worst, 1e-11);
  return {10, "special functions", t.ok, t.text.str()};
}

Check scaling() {
  Tally t;
  const int sizes[] = {25, 50, 100, 200};
  std::vector<double> lx;
  std::vector<double> ly;
  std::ostringstream times;
  for (int n : sizes) {
    const NodeLayout layout = layout_nodes(1e-5, Interval{}, n);
    const int reps = std::max(3, 40000000 / (n * n * n));
    double best = INFINITY;
    for (int trial = 0; trial < 7; ++trial) {
      const auto start = std::chrono::steady_clock::now();
      double sink = 0.0;
      for (int r = 0; r < reps; ++r) sink += coefficient_table_serial(layout, 1).unit(0, n);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
      if (std::isfinite(sink)) best = std::min(best, secs);
    }
    lx.push_back(std::log(static_cast<double>(n)));
    ly.push_back(std::log(best));
    times << " n" << n << '=' << sci(best) << 's';
  }
  const double mx = (lx[0] + lx[1] + lx[2] + lx[3]) / 4.0;
  const double my = (ly[0] + ly[1] + ly[2] + ly[3]) / 4.0;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  const double slope = sxy / sxx;
  t.expect_le("power-law exponent", slope, 3.0);
  return {11, "coefficient cost scaling", t.ok, t.text.str() + ";" + times.str()};
}

}  // namespace

Check run_check(int id) {
  switch (id) {
    case 1: return table1();
    case 2: return table2();
    case 3: return table3();
    case 4: return fig1();
    case 5: return coefficients();
    case 6: return cycle_index();
    case 7: return polynomial_exactness();
    case 8: return moments();
    case 9: return bound_sanity();
    case 10: return special_functions();
    case 11: return scaling();
    default: throw ParameterError("run_check: criteria are numbered 1..11");
  }
}

std::vector<Check> run_all_checks() {
  std::vector<Check> out;
  for (int id = 1; id <= 11; ++id) {
    try {
      out.push_back(run_check(id));
    } catch (const std::exception& e) {
      out.push_back({id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()});
    }
  }
  return out;
}

}  // namespace hfp::oracle
