#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hfp/integrand.hpp"
#include "hfp/orthogonal.hpp"

namespace hfp {

using FunctionParams = std::map<std::string, double>;

/// A registered integrand together with what the bounds need.
struct BuiltinIntegrand {
  Integrand integrand;
  /// Ellipse parameter of the nearest complex singularity (infinity if entire).
  double rho_singularity;
  /// k -> max |f^(k)| on [-1, 1]; empty when no closed-form bound is known.
  std::function<double(int)> derivative_bound;
};

/// Registered names:
///   exp                      e^x
///   inv-sqrt-pole  (c=1.21)  (c - x^2)^{-1/2}
///   rational-pole  (lambda=5) (x^2 + lambda^2)^{-1}
///   monomial       (d=0)     x^d
/// Throws ConfigError for unknown names or parameters.
[[nodiscard]] BuiltinIntegrand make_builtin(const std::string& name, const FunctionParams& params = {});

[[nodiscard]] std::vector<std::string> builtin_names();

/// Closed-form value of FP int w f / (x - xi)^{p+1} when one is known for
/// this builtin and weight (the three benchmark integrals).
[[nodiscard]] std::optional<double> builtin_exact(const std::string& name, const FunctionParams& params,
                                                  const WeightFamily& w, double xi, int p);

/// "c=1.21;lambda=5" style rendering, keys sorted; full round-trip precision.
[[nodiscard]] std::string format_params(const FunctionParams& params);
[[nodiscard]] FunctionParams parse_params(const std::string& text);

}  // namespace hfp
