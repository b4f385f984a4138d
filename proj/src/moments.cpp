#include "hfp/moments.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "hfp/error.hpp"

namespace hfp {

double finite_part_moment(const WeightFamily& w, double xi, int q) {
  const Interval& iv = w.interval();
  if (!iv.contains(xi)) {
    std::ostringstream msg;
    msg << "singularity outside interval: xi = " << xi;
    throw DomainError(msg.str());
  }
  if (q < 1) throw ParameterError("finite_part_moment: q must be at least 1");

  if (w.moment_provider()) return w.moment_provider()(xi, q);

  switch (w.kind()) {
    case WeightKind::Legendre: {
      const double right = iv.b - xi;
      const double left = iv.a - xi;  // negative
      if (q == 1) return std::log(right / -left);
      const double e = 1.0 - q;
      return (std::pow(right, e) - std::pow(left, e)) / e;
    }
    case WeightKind::Chebyshev1:
      return 0.0;
    case WeightKind::Jacobi:
      throw UnsupportedError("finite-part moments of Jacobi weights need a moment provider");
    case WeightKind::Custom:
      throw UnsupportedError("custom weight has no moment provider");
  }
  return 0.0;
}

MomentVector finite_part_moments(const WeightFamily& w, double xi, int p) {
  if (p < 0) throw ParameterError("finite_part_moments: p must be non-negative");
  MomentVector out;
  out.xi = xi;
  out.values.reserve(static_cast<std::size_t>(p + 1));
  for (int q = 1; q <= p + 1; ++q) out.values.push_back(finite_part_moment(w, xi, q));
  return out;
}

}  // namespace hfp
