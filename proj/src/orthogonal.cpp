#include "hfp/orthogonal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <string>

#include "hfp/error.hpp"

namespace hfp {

namespace {

void check_interval(const Interval& iv) {
  if (!(iv.a < iv.b) || !std::isfinite(iv.a) || !std::isfinite(iv.b)) {
    throw DomainError("weight interval must satisfy a < b with finite endpoints");
  }
}

void check_exponents(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("Jacobi exponents must satisfy alpha > -1 and beta > -1");
  }
}

// Mass of (1 - t)^alpha (1 + t)^beta over (-1, 1).
double reference_mass(double alpha, double beta) {
  return std::exp2(alpha + beta + 1.0) * std::tgamma(alpha + 1.0) * std::tgamma(beta + 1.0) /
         std::tgamma(alpha + beta + 2.0);
}

GaussRule chebyshev1_reference(int m) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(m));
  rule.weights.assign(static_cast<std::size_t>(m), std::numbers::pi / m);
  for (int k = 1; k <= m; ++k) {
    // cos((2k-1) pi / 2m) descends with k; store ascending.
    rule.nodes[static_cast<std::size_t>(m - k)] =
        std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * m));
  }
  if (m % 2 == 1) rule.nodes[static_cast<std::size_t>(m / 2)] = 0.0;
  return rule;
}

struct OrthonormalValue {
  double p;       // p_m(x)
  double dp;      // p_m'(x)
  double christ;  // sum_{k<m} p_k(x)^2
};

OrthonormalValue orthonormal_eval(double x, const std::vector<double>& diag,
                                  const std::vector<double>& off_sq, double mass, int m) {
  double prev = 0.0, dprev = 0.0;
  double cur = 1.0 / std::sqrt(mass), dcur = 0.0;
  double christ = 0.0;
  for (int k = 0; k < m; ++k) {
    christ += cur * cur;
    const double bk = k == 0 ? 0.0 : std::sqrt(off_sq[static_cast<std::size_t>(k)]);
    const double bnext = std::sqrt(off_sq[static_cast<std::size_t>(k + 1)]);
    const double ak = diag[static_cast<std::size_t>(k)];
    const double next = ((x - ak) * cur - bk * prev) / bnext;
    const double dnext = (cur + (x - ak) * dcur - bk * dprev) / bnext;
    prev = cur;
    dprev = dcur;
    cur = next;
    dcur = dnext;
  }
  return {cur, dcur, christ};
}

GaussRule jacobi_reference(double alpha, double beta, int m) {
  std::vector<double> diag, off_sq;
  // One extra coefficient so the Newton polish can evaluate p_m.
  detail::jacobi_recurrence(alpha, beta, m + 1, diag, off_sq);
  const double mass = reference_mass(alpha, beta);

  std::vector<double> d(diag.begin(), diag.begin() + m);
  std::vector<double> e(static_cast<std::size_t>(m), 0.0);
  for (int k = 1; k < m; ++k) e[static_cast<std::size_t>(k)] = std::sqrt(off_sq[static_cast<std::size_t>(k)]);
  std::vector<double> first_sq;
  detail::tridiagonal_eigen(d, e, first_sq);

  GaussRule rule;
  rule.nodes = d;
  rule.weights.resize(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    double x = rule.nodes[static_cast<std::size_t>(k)];
    for (int it = 0; it < 3; ++it) {
      const OrthonormalValue v = orthonormal_eval(x, diag, off_sq, mass, m);
      if (v.dp == 0.0) break;
      const double step = v.p / v.dp;
      x -= step;
      if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(x))) break;
    }
    rule.nodes[static_cast<std::size_t>(k)] = x;
    rule.weights[static_cast<std::size_t>(k)] = 1.0 / orthonormal_eval(x, diag, off_sq, mass, m).christ;
  }

  if (alpha == beta) {
    for (int k = 0; k < m / 2; ++k) {
      auto lo = static_cast<std::size_t>(k);
      auto hi = static_cast<std::size_t>(m - 1 - k);
      const double x = 0.5 * (rule.nodes[hi] - rule.nodes[lo]);
      const double w = 0.5 * (rule.weights[hi] + rule.weights[lo]);
      rule.nodes[lo] = -x;
      rule.nodes[hi] = x;
      rule.weights[lo] = rule.weights[hi] = w;
    }
    if (m % 2 == 1) rule.nodes[static_cast<std::size_t>(m / 2)] = 0.0;
  }
  return rule;
}

}  // namespace

namespace detail {

void jacobi_recurrence(double alpha, double beta, int m, std::vector<double>& diag,
                       std::vector<double>& offdiag_sq) {
  diag.assign(static_cast<std::size_t>(m), 0.0);
  offdiag_sq.assign(static_cast<std::size_t>(m + 1), 0.0);
  const double ab = alpha + beta;
  const double b2a2 = beta * beta - alpha * alpha;
  for (int k = 0; k < m; ++k) {
    const double s = 2.0 * k + ab;
    diag[static_cast<std::size_t>(k)] = k == 0 ? (beta - alpha) / (ab + 2.0) : b2a2 / (s * (s + 2.0));
  }
  offdiag_sq[0] = reference_mass(alpha, beta);
  for (int k = 1; k <= m; ++k) {
    const double s = 2.0 * k + ab;
    double b;
    if (k == 1) {
      // The general formula has a removable 0/0 when alpha + beta = -1.
      b = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    offdiag_sq[static_cast<std::size_t>(k)] = b;
  }
}

void tridiagonal_eigen(std::vector<double>& d, std::vector<double>& e,
                       std::vector<double>& first_components_sq) {
  const int n = static_cast<int>(d.size());
  std::vector<double> z(static_cast<std::size_t>(n), 0.0);
  if (n == 0) {
    first_components_sq.clear();
    return;
  }
  z[0] = 1.0;
  for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(i)];
  e[static_cast<std::size_t>(n - 1)] = 0.0;

  auto at = [](std::vector<double>& v, int i) -> double& { return v[static_cast<std::size_t>(i)]; };
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int mm;
    do {
      for (mm = l; mm < n - 1; ++mm) {
        const double dd = std::abs(at(d, mm)) + std::abs(at(d, mm + 1));
        if (std::abs(at(e, mm)) <= eps * dd) break;
      }
      if (mm != l) {
        if (++iter > 60) throw NumericalError("tridiagonal eigensolver did not converge");
        double g = (at(d, l + 1) - at(d, l)) / (2.0 * at(e, l));
        double r = std::hypot(g, 1.0);
        g = at(d, mm) - at(d, l) + at(e, l) / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        bool deflated = false;
        for (i = mm - 1; i >= l; --i) {
          double f = s * at(e, i);
          const double b = c * at(e, i);
          r = std::hypot(f, g);
          at(e, i + 1) = r;
          if (r == 0.0) {
            at(d, i + 1) -= p;
            at(e, mm) = 0.0;
            deflated = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = at(d, i + 1) - p;
          r = (at(d, i) - g) * s + 2.0 * c * b;
          p = s * r;
          at(d, i + 1) = g + p;
          g = c * r - b;
          f = at(z, i + 1);
          at(z, i + 1) = s * at(z, i) + c * f;
          at(z, i) = c * at(z, i) - s * f;
        }
        if (deflated) continue;
        at(d, l) -= p;
        at(e, l) = g;
        at(e, mm) = 0.0;
      }
    } while (mm != l);
  }

  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });
  std::vector<double> sorted_d(order.size());
  first_components_sq.resize(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    sorted_d[k] = d[order[k]];
    first_components_sq[k] = z[order[k]] * z[order[k]];
  }
  d = std::move(sorted_d);
}

}  // namespace detail

WeightFamily::WeightFamily(WeightKind kind, double alpha, double beta, Interval iv)
    : kind_(kind), alpha_(alpha), beta_(beta), interval_(iv) {
  check_interval(iv);
}

WeightFamily WeightFamily::legendre(Interval iv) { return {WeightKind::Legendre, 0.0, 0.0, iv}; }

WeightFamily WeightFamily::chebyshev1(Interval iv) {
  return {WeightKind::Chebyshev1, -0.5, -0.5, iv};
}

WeightFamily WeightFamily::jacobi(double alpha, double beta, Interval iv) {
  check_exponents(alpha, beta);
  return {WeightKind::Jacobi, alpha, beta, iv};
}

WeightFamily WeightFamily::custom(RuleProvider rule, double mass, MomentProvider moments,
                                  Interval iv) {
  if (!rule) throw ParameterError("custom weight requires a rule provider");
  if (!(mass > 0.0)) throw ParameterError("custom weight requires a positive mass");
  WeightFamily w{WeightKind::Custom, 0.0, 0.0, iv};
  w.rule_ = std::move(rule);
  w.custom_mass_ = mass;
  w.moments_ = std::move(moments);
  return w;
}

WeightFamily WeightFamily::with_moments(MomentProvider moments) const {
  WeightFamily w = *this;
  w.moments_ = std::move(moments);
  return w;
}

bool WeightFamily::symmetric() const { return kind_ != WeightKind::Custom && alpha_ == beta_; }

double WeightFamily::operator()(double x) const {
  if (kind_ == WeightKind::Custom) return std::numeric_limits<double>::quiet_NaN();
  const double t = (2.0 * x - interval_.a - interval_.b) / interval_.length();
  return std::pow(1.0 - t, alpha_) * std::pow(1.0 + t, beta_);
}

GaussRule gauss_rule(const WeightFamily& w, int m) {
  if (m <= 0) throw ParameterError("gauss_rule: m must be positive, got " + std::to_string(m));
  if (w.kind() == WeightKind::Custom) {
    GaussRule rule = w.rule_provider()(m);
    if (rule.size() != m || rule.weights.size() != rule.nodes.size()) {
      throw ParameterError("custom rule provider returned a rule of the wrong size");
    }
    return rule;
  }
  check_exponents(w.alpha(), w.beta());
  GaussRule rule = w.kind() == WeightKind::Chebyshev1 ? chebyshev1_reference(m)
                                                      : jacobi_reference(w.alpha(), w.beta(), m);
  const Interval& iv = w.interval();
  if (iv.a != -1.0 || iv.b != 1.0) {
    const double half = 0.5 * iv.length();
    const double mid = iv.midpoint();
    for (double& x : rule.nodes) x = mid + half * x;
    for (double& lam : rule.weights) lam *= half;
  }
  return rule;
}

double weight_mass(const WeightFamily& w) {
  const double half = 0.5 * w.interval().length();
  switch (w.kind()) {
    case WeightKind::Legendre:
      return w.interval().length();
    case WeightKind::Chebyshev1:
      return std::numbers::pi * half;
    case WeightKind::Jacobi:
      return reference_mass(w.alpha(), w.beta()) * half;
    case WeightKind::Custom:
      return w.custom_mass();
  }
  return 0.0;
}

}  // namespace hfp
