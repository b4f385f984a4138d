#pragma once

#include <vector>

#include "hfp/orthogonal.hpp"

namespace hfp {

/// Finite-part moments mu_1..mu_{p+1} at xi; values[q-1] holds mu_q.
struct MomentVector {
  double xi = 0.0;
  std::vector<double> values;

  [[nodiscard]] double mu(int q) const { return values.at(static_cast<std::size_t>(q - 1)); }
};

/// mu_q(xi) = finite-part integral of w(x) (x - xi)^{-q} over (a, b), q >= 1.
///
/// Legendre:   mu_1 = ln((b - xi) / (xi - a)),
///             mu_q = ((b - xi)^{1-q} - (a - xi)^{1-q}) / (1 - q).
/// Chebyshev1: mu_q = 0 for every q (the principal value vanishes for all
///             xi, and higher finite parts are its xi-derivatives).
/// Anything else goes through the weight's moment provider; without one
/// an UnsupportedError is thrown.
[[nodiscard]] double finite_part_moment(const WeightFamily& w, double xi, int q);

[[nodiscard]] MomentVector finite_part_moments(const WeightFamily& w, double xi, int p);

}  // namespace hfp
