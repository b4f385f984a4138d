#include "hfp/engine.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <string>

#include "hfp/error.hpp"
#include "hfp/moments.hpp"

namespace hfp {

std::vector<int> select_closest(std::span<const double> nodes, double xi, double scale) {
  if (nodes.empty()) throw ParameterError("select_closest: empty node list");
  const double tol = 1e-14 * scale;
  double best = std::numeric_limits<double>::infinity();
  int best_index = 0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const double dist = std::abs(xi - nodes[k]);
    if (dist < best) {
      best = dist;
      best_index = static_cast<int>(k);
    }
  }
  std::vector<int> out{best_index};
  if (best == 0.0) return out;
  // Midpoint tie with a neighbour.
  for (int nb : {best_index - 1, best_index + 1}) {
    if (nb < 0 || nb >= static_cast<int>(nodes.size())) continue;
    const double dist = std::abs(xi - nodes[static_cast<std::size_t>(nb)]);
    if (std::abs(dist - best) <= tol) {
      out.push_back(nb);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_common(const WeightFamily& w, double xi, int p) {
  if (!w.interval().contains(xi)) {
    std::ostringstream msg;
    msg << "singularity outside interval: xi = " << xi << " not in (" << w.interval().a << ", "
        << w.interval().b << ")";
    throw DomainError(msg.str());
  }
  if (p < 0) throw ParameterError("p must be non-negative");
}

std::vector<double> derivatives_or_throw(const Integrand& f, double xi, int p) {
  if (!f.derivatives_at_xi) throw ParameterError("integrand '" + f.label + "' supplies no derivatives");
  std::vector<double> d = f.derivatives_at_xi(xi, p);
  if (d.size() < static_cast<std::size_t>(p + 1)) {
    throw ParameterError("integrand '" + f.label + "' returned fewer than p+1 derivatives");
  }
  return d;
}

double moment_term(const WeightFamily& w, std::span<const double> derivs, double xi, int p) {
  const MomentVector mu = finite_part_moments(w, xi, p);
  double sum = 0.0;
  double factorial = 1.0;
  for (int j = 0; j <= p; ++j) {
    if (j > 0) factorial *= j;
    sum += derivs[static_cast<std::size_t>(j)] / factorial * mu.mu(p + 1 - j);
  }
  return sum;
}

}  // namespace

QuadratureResult evaluate_hfp(const Integrand& f, const WeightFamily& w, const GaussRule& rule,
                              double xi, int p, int n) {
  check_common(w, xi, p);
  if (n <= p) {
    throw ParameterError("need n > p, got n = " + std::to_string(n) + ", p = " + std::to_string(p));
  }
  const NodeLayout layout = layout_nodes(xi, w.interval(), n);
  const CoefficientTable table = coefficient_table(layout, p);
  const std::vector<double> derivs = derivatives_or_throw(f, xi, p);

  std::vector<double> f_nodes(layout.nodes.size());
  for (std::size_t i = 0; i < f_nodes.size(); ++i) f_nodes[i] = f.value(layout.nodes[i]);

  QuadratureResult res;
  res.closest_indices = select_closest(rule.nodes, xi, w.interval().length());
  res.parameters = {rule.size(), n, layout.nu, layout.h, p, xi};
  res.node_distances.resize(rule.nodes.size());

  double gauss = 0.0;
  for (int k = 0; k < rule.size(); ++k) {
    const double x = rule.nodes[static_cast<std::size_t>(k)];
    const double lam = rule.weights[static_cast<std::size_t>(k)];
    res.node_distances[static_cast<std::size_t>(k)] = std::abs(x - xi);
    const bool closest = std::find(res.closest_indices.begin(), res.closest_indices.end(), k) !=
                         res.closest_indices.end();
    if (closest) {
      const double term = lam * surrogate_divdiff(table, f_nodes, x);
      res.surrogate_terms.push_back({k, term});
      gauss += term;
    } else {
      gauss += lam * confluent_divdiff_direct(f.value(x), derivs, xi, p, x);
    }
  }
  res.gauss_sum = gauss;
  res.moment_sum = moment_term(w, derivs, xi, p);
  res.value = res.gauss_sum + res.moment_sum;
  if (!std::isfinite(res.value)) throw NumericalError("quadrature produced a non-finite value");
  return res;
}

QuadratureResult evaluate_hfp(const Integrand& f, const WeightFamily& w, double xi, int p, int m,
                              int n) {
  check_common(w, xi, p);
  if (n <= p) {
    throw ParameterError("need n > p, got n = " + std::to_string(n) + ", p = " + std::to_string(p));
  }
  return evaluate_hfp(f, w, gauss_rule(w, m), xi, p, n);
}

double evaluate_baseline(const Integrand& f, const WeightFamily& w, double xi, int p, int m) {
  check_common(w, xi, p);
  const GaussRule rule = gauss_rule(w, m);
  const std::vector<double> derivs = derivatives_or_throw(f, xi, p);
  double gauss = 0.0;
  for (int k = 0; k < rule.size(); ++k) {
    const double x = rule.nodes[static_cast<std::size_t>(k)];
    if (x == xi) {
      throw NumericalError("baseline rule: Gauss node coincides with xi (division by zero)");
    }
    gauss += rule.weights[static_cast<std::size_t>(k)] * confluent_divdiff_direct(f.value(x), derivs, xi, p, x);
  }
  const double value = gauss + moment_term(w, derivs, xi, p);
  if (!std::isfinite(value)) throw NumericalError("baseline rule produced a non-finite value");
  return value;
}

SearchResult search_optimal_n(const Integrand& f, const WeightFamily& w, double xi, int p, int m,
                              int lo, int hi, SearchCriterion criterion,
                              std::optional<double> exact) {
  check_common(w, xi, p);
  if (lo > hi) throw ParameterError("search_optimal_n: empty range");
  if (lo <= p) throw ParameterError("search_optimal_n: need lo > p");
  if (hi > kMaxSearchN) throw ParameterError("search_optimal_n: hi must not exceed 200");
  if (criterion == SearchCriterion::Reference && !exact) {
    throw ParameterError("search_optimal_n: Reference criterion needs an exact value");
  }

  const GaussRule rule = gauss_rule(w, m);
  const int count = hi - lo + 1;
  std::vector<std::optional<QuadratureResult>> results(static_cast<std::size_t>(count));
  std::vector<std::string> failures(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> fatal(static_cast<std::size_t>(count));

#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < count; ++idx) {
    try {
      results[static_cast<std::size_t>(idx)] = evaluate_hfp(f, w, rule, xi, p, lo + idx);
    } catch (const ParameterError& e) {
      // infeasible layout for this n; recorded and skipped
      failures[static_cast<std::size_t>(idx)] = e.what();
    } catch (...) {
      fatal[static_cast<std::size_t>(idx)] = std::current_exception();
    }
  }
  for (const auto& ex : fatal) {
    if (ex) std::rethrow_exception(ex);
  }

  SearchResult out{};
  out.diagnostics.resize(static_cast<std::size_t>(count));
  for (int idx = 0; idx < count; ++idx) {
    const auto& r = results[static_cast<std::size_t>(idx)];
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.diagnostics[static_cast<std::size_t>(idx)] = {lo + idx, r.has_value(), r ? r->value : nan, nan};
  }

  int chosen = -1;
  if (criterion == SearchCriterion::Reference) {
    double best = std::numeric_limits<double>::infinity();
    for (int idx = 0; idx < count; ++idx) {
      auto& d = out.diagnostics[static_cast<std::size_t>(idx)];
      if (!d.valid) continue;
      d.score = std::abs(d.value - *exact);
      if (d.score < best) {
        best = d.score;
        chosen = idx;
      }
    }
  } else {
    for (int idx = 0; idx + 1 < count; ++idx) {
      auto& d = out.diagnostics[static_cast<std::size_t>(idx)];
      const auto& nx = out.diagnostics[static_cast<std::size_t>(idx + 1)];
      if (d.valid && nx.valid) d.score = std::abs(d.value - nx.value);
    }
    auto score = [&](int idx) { return out.diagnostics[static_cast<std::size_t>(idx)].score; };
    for (int idx = 0; idx + 3 < count && chosen < 0; ++idx) {
      if (std::isnan(score(idx))) continue;
      bool plateau = true;
      for (int j = 1; j <= 3; ++j) {
        const double later = score(idx + j);
        if (std::isnan(later) || later < score(idx)) {
          plateau = false;
          break;
        }
      }
      if (plateau) chosen = idx;
    }
    if (chosen < 0) {
      double best = std::numeric_limits<double>::infinity();
      for (int idx = 0; idx < count; ++idx) {
        if (!std::isnan(score(idx)) && score(idx) < best) {
          best = score(idx);
          chosen = idx;
        }
      }
    }
    if (chosen < 0) {
      for (int idx = 0; idx < count && chosen < 0; ++idx) {
        if (out.diagnostics[static_cast<std::size_t>(idx)].valid) chosen = idx;
      }
    }
  }
  if (chosen < 0) {
    throw ParameterError("search_optimal_n: no feasible n in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]: " + failures.front());
  }
  out.n_hat = lo + chosen;
  out.best = *results[static_cast<std::size_t>(chosen)];
  return out;
}

}  // namespace hfp
