#include "oracle/oracles.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>

#include "hfp/error.hpp"

namespace hfp::oracle {

namespace {

using boost::math::quadrature::gauss_kronrod;
using boost::math::quadrature::tanh_sinh;
using big = boost::multiprecision::cpp_bin_float_50;

// Polynomial extrapolation to eps = 0 (Neville) from samples at eps[k].
big extrapolate_to_zero(const std::vector<big>& eps, std::vector<big> values) {
  const std::size_t n = eps.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      const big& e0 = eps[k - level];
      const big& e1 = eps[k];
      values[k] = (e0 * values[k] - e1 * values[k - 1]) / (e0 - e1);
    }
  }
  return values[n - 1];
}

// Taylor coefficients g^(j)(xi)/j!, j = 0, 1, of the weight about xi.
std::vector<big> weight_taylor(const WeightFamily& w, const big& xi) {
  if (w.kind() == WeightKind::Legendre) return {big(1), big(0)};
  const big s = 1 - xi * xi;
  return {1 / sqrt(s), xi / (s * sqrt(s))};
}

}  // namespace

double integrate_smooth(const std::function<double(double)>& g, double a, double b) {
  double err = 0.0;
  return gauss_kronrod<double, 61>::integrate(g, a, b, 20, 1e-15, &err);
}

double integrate_endpoint_singular(const std::function<double(double)>& g, double a, double b) {
  tanh_sinh<double> integrator;
  return integrator.integrate(g, a, b, 1e-15);
}

double weighted_monomial_integral(const WeightFamily& w, int d) {
  const Interval iv = w.interval();
  const double alpha = w.kind() == WeightKind::Chebyshev1 ? -0.5 : w.alpha();
  const double beta = w.kind() == WeightKind::Chebyshev1 ? -0.5 : w.beta();
  const double c = iv.midpoint();
  const double h = 0.5 * iv.length();
  // tc is the signed distance to the nearer endpoint of (-1, 1), exact near the ends.
  auto g = [&](double t, double tc) {
    const double right = t > 0 ? tc : 1.0 - t;
    const double left = t < 0 ? -tc : 1.0 + t;
    return std::pow(right, alpha) * std::pow(left, beta) * std::pow(c + h * t, d);
  };
  tanh_sinh<double> integrator;
  return h * integrator.integrate(g, -1.0, 1.0, 1e-15);
}

double excision_moment(const WeightFamily& w, double xi_in, int q) {
  if (q < 1) throw ParameterError("excision_moment: q must be positive");
  const Interval iv = w.interval();
  const bool cheb = w.kind() == WeightKind::Chebyshev1;
  if (!cheb && w.kind() != WeightKind::Legendre) {
    throw UnsupportedError("excision_moment: Legendre and Chebyshev1 only");
  }
  if (q > 3 || (cheb && (iv.a != -1.0 || iv.b != 1.0))) {
    throw UnsupportedError("excision_moment: q <= 3, Chebyshev1 on (-1, 1) only");
  }
  const big xi = xi_in;
  const std::vector<big> c = weight_taylor(w, xi);

  // Pieces [xi + eps 2^j, xi + eps 2^{j+1}] (and mirrored) keep the integrand's
  // variation per piece bounded, so a fixed Gauss-Kronrod rule resolves each.
  auto side = [&](const big& eps, const big& end, int dir) {
    const big length = dir > 0 ? end - xi : xi - end;
    big total = 0;
    for (big lo = eps; lo < length;) {
      const big hi = lo * 2 < length ? lo * 2 : length;
      const big x0 = xi + dir * lo;
      const big x1 = hi < length ? big(xi + dir * hi) : end;
      big err = 0;
      if (cheb) {
        auto g = [&](const big& theta) { return pow(cos(theta) - xi, -q); };
        const big t0 = acos(x0);
        const big t1 = acos(x1);
        total += gauss_kronrod<big, 61>::integrate(g, t0 < t1 ? t0 : t1, t0 < t1 ? t1 : t0, 0, 0, &err);
      } else {
        auto g = [&](const big& x) { return pow(x - xi, -q); };
        total += gauss_kronrod<big, 61>::integrate(g, x0 < x1 ? x0 : x1, x0 < x1 ? x1 : x0, 0, 0, &err);
      }
      lo = hi;
    }
    return total;
  };

  auto excised = [&](const big& eps) {
    big value = side(eps, big(iv.a), -1) + side(eps, big(iv.b), 1);
    for (int j = 0; j <= q - 2; ++j) {
      if ((q - j) % 2 != 0) continue;  // odd powers cancel between the two sides
      value -= 2 * c[static_cast<std::size_t>(j)] * pow(eps, j + 1 - q) / (q - 1 - j);
    }
    return value;
  };

  const double room = std::min(xi_in - iv.a, iv.b - xi_in);
  big eps0 = std::min(0.01, 0.25 * room);
  std::vector<big> eps;
  std::vector<big> vals;
  for (int k = 0; k < 8; ++k) {
    eps.push_back(eps0);
    vals.push_back(excised(eps0));
    eps0 /= 2;
  }
  return static_cast<double>(extrapolate_to_zero(eps, vals));
}

double polynomial_finite_part(int d, double xi, int q, double a, double b) {
  using ld = long double;
  const ld x0 = xi;
  const ld ua = static_cast<ld>(a) - x0;
  const ld ub = static_cast<ld>(b) - x0;
  ld total = 0.0L;
  ld binom = 1.0L;
  for (int k = 0; k <= d; ++k) {
    if (k > 0) binom = binom * (d - k + 1) / k;
    const ld coef = binom * std::pow(x0, static_cast<ld>(d - k));
    const int e = k - q;
    ld piece;
    if (e == -1) {
      piece = std::log(ub / -ua);
    } else {
      piece = (std::pow(ub, static_cast<ld>(e + 1)) - std::pow(ua, static_cast<ld>(e + 1))) / (e + 1);
    }
    total += coef * piece;
  }
  return static_cast<double>(total);
}

double exp_finite_part(double xi, int p) {
  if (p != 0 && p != 1) throw UnsupportedError("exp_finite_part: p in {0, 1}");
  const double ex = std::exp(xi);
  std::function<double(double)> g;
  if (p == 0) {
    g = [xi](double x) {
      const double t = x - xi;
      return t == 0.0 ? 1.0 : std::expm1(t) / t;
    };
  } else {
    g = [xi](double x) {
      const double t = x - xi;
      if (std::abs(t) < 1e-2) {
        // sum_{k>=0} t^k / (k+2)!
        double term = 0.5;
        double acc = 0.0;
        for (int k = 0; k < 12; ++k) {
          acc += term;
          term *= t / (k + 3);
        }
        return acc;
      }
      return (std::expm1(t) - t) / (t * t);
    };
  }
  const double body = integrate_smooth(g, -1.0, xi) + integrate_smooth(g, xi, 1.0);
  const double mu1 = std::log((1.0 - xi) / (1.0 + xi));
  double value = ex * (body + mu1);
  if (p == 1) {
    const double mu2 = -1.0 / (1.0 - xi) - 1.0 / (1.0 + xi);
    value += ex * mu2;
  }
  return value;
}

double ei_extended(double x) {
  if (x == 0.0) throw DomainError("ei_extended: pole at 0");
  // The alternating series cancels by e^|x| for negative x, hence 100 digits.
  using wide = boost::multiprecision::cpp_bin_float_100;
  const wide bx = x;
  wide sum = 0;
  wide term = 1;
  const wide tiny = std::numeric_limits<wide>::epsilon();
  for (int k = 1; k < 2000; ++k) {
    term *= bx / k;
    const wide add = term / k;
    sum += add;
    if (abs(add) < tiny * abs(sum) && k > abs(x)) break;
  }
  const wide value = boost::math::constants::euler<wide>() + log(abs(bx)) + sum;
  return static_cast<double>(value);
}

double omega_taylor_coefficient(std::span<const double> nodes, int k, double x) {
  using ld = long double;
  std::vector<ld> c{1.0L};
  for (double a : nodes) {
    const ld shift = static_cast<ld>(x) - a;
    std::vector<ld> next(c.size() + 1, 0.0L);
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d + 1] += c[d];
      next[d] += shift * c[d];
    }
    c = std::move(next);
  }
  if (k < 0 || k >= static_cast<int>(c.size())) return 0.0;
  return static_cast<double>(c[static_cast<std::size_t>(k)]);
}

}  // namespace hfp::oracle
