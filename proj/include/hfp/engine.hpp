#pragma once

#include <optional>
#include <vector>

#include "hfp/integrand.hpp"
#include "hfp/interpolation.hpp"
#include "hfp/orthogonal.hpp"

namespace hfp {

/// Gauss node(s) nearest to xi: one index, or two when xi is the midpoint of
/// adjacent nodes to within 1e-14 * scale.
[[nodiscard]] std::vector<int> select_closest(std::span<const double> nodes, double xi,
                                              double scale = 2.0);

struct SurrogateTerm {
  int node_index;
  double contribution;  // lambda_c * L_n[x_c, xi^{p+1}]
};

struct QuadratureParameters {
  int m = 0;
  int n = 0;
  int nu = 0;
  double h = 0.0;
  int p = 0;
  double xi = 0.0;
};

/// H*_{m,n,p} and the pieces it was assembled from.
struct QuadratureResult {
  double value = 0.0;
  double gauss_sum = 0.0;
  double moment_sum = 0.0;
  std::vector<SurrogateTerm> surrogate_terms;
  std::vector<int> closest_indices;
  std::vector<double> node_distances;  // |x_k - xi| for every Gauss node
  QuadratureParameters parameters;
};

/// H*_{m,n,p}(w; f; xi): Gauss rule on f[x, xi^{p+1}] with the closest
/// node(s) replaced by the interpolatory surrogate on the equidistant layout,
/// plus sum_j f^(j)(xi)/j! mu_{p+1-j}(xi).
[[nodiscard]] QuadratureResult evaluate_hfp(const Integrand& f, const WeightFamily& w, double xi,
                                            int p, int m, int n);

/// Same, reusing a precomputed rule (must belong to w).
[[nodiscard]] QuadratureResult evaluate_hfp(const Integrand& f, const WeightFamily& w,
                                            const GaussRule& rule, double xi, int p, int n);

/// Plain Gauss rule on the subtracted integrand with the direct divided
/// difference at every node. Throws NumericalError if a node equals xi.
[[nodiscard]] double evaluate_baseline(const Integrand& f, const WeightFamily& w, double xi, int p,
                                       int m);

enum class SearchCriterion { Reference, Stabilization };

struct SearchPoint {
  int n;
  bool valid;      // false when the layout is infeasible for this n
  double value;    // H*(n)
  double score;    // |H* - exact| (Reference) or |H*(n) - H*(n+1)| (Stabilization)
};

struct SearchResult {
  int n_hat;
  QuadratureResult best;
  std::vector<SearchPoint> diagnostics;
};

/// Picks n in [lo, hi].
///   Reference:     argmin |H*(n) - exact|, ties toward smaller n.
///   Stabilization: the smallest n whose successive difference
///                  d(n) = |H*(n) - H*(n+1)| is not undercut by any of the
///                  next three differences; falls back to argmin d(n).
/// Requires p < lo <= hi <= 200. Evaluations run in parallel.
[[nodiscard]] SearchResult search_optimal_n(const Integrand& f, const WeightFamily& w, double xi,
                                            int p, int m, int lo, int hi, SearchCriterion criterion,
                                            std::optional<double> exact = std::nullopt);

/// Largest upper limit accepted by search_optimal_n.
inline constexpr int kMaxSearchN = 200;

}  // namespace hfp
