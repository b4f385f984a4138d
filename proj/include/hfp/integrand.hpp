#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace hfp {

/// The smooth factor f of the integrand. Derivatives at the singularity are
/// always supplied by the caller; nothing in the library differentiates
/// numerically.
struct Integrand {
  std::function<double(double)> value;
  /// (xi, p) -> {f(xi), f'(xi), ..., f^(p)(xi)}
  std::function<std::vector<double>(double, int)> derivatives_at_xi;
  /// Optional analytic continuation, used only by the error bounds.
  std::function<std::complex<double>(std::complex<double>)> complex_value;
  std::string label;
};

}  // namespace hfp
