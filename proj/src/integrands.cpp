#include "hfp/integrands.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hfp/bounds.hpp"
#include "hfp/error.hpp"
#include "hfp/specialfn.hpp"

namespace hfp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double param_or(const FunctionParams& params, const std::string& key, double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void only_keys(const std::string& name, const FunctionParams& params,
               std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : params) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError("integrand '" + name + "': unknown parameter '" + key + "'");
  }
}

void max_order(const std::string& name, int p, int limit) {
  if (p > limit) {
    throw ParameterError("integrand '" + name + "' ships derivatives up to order " +
                         std::to_string(limit) + ", requested " + std::to_string(p));
  }
}

BuiltinIntegrand make_exp() {
  BuiltinIntegrand b;
  b.integrand.label = "exp";
  b.integrand.value = [](double x) { return std::exp(x); };
  b.integrand.derivatives_at_xi = [](double xi, int p) {
    return std::vector<double>(static_cast<std::size_t>(p + 1), std::exp(xi));
  };
  b.integrand.complex_value = [](std::complex<double> z) { return std::exp(z); };
  b.rho_singularity = kInf;
  b.derivative_bound = [](int) { return std::numbers::e; };
  return b;
}

BuiltinIntegrand make_inv_sqrt_pole(double c) {
  if (!(c > 1.0)) throw ConfigError("integrand 'inv-sqrt-pole': need c > 1 so f is smooth on [-1, 1]");
  BuiltinIntegrand b;
  b.integrand.label = "inv-sqrt-pole";
  b.integrand.value = [c](double x) { return 1.0 / std::sqrt(c - x * x); };
  b.integrand.derivatives_at_xi = [c](double xi, int p) {
    max_order("inv-sqrt-pole", p, 2);
    const double u = c - xi * xi;
    const double r = 1.0 / std::sqrt(u);
    const std::vector<double> all{r, xi * r / u, r / u + 3.0 * xi * xi * r / (u * u)};
    return std::vector<double>(all.begin(), all.begin() + p + 1);
  };
  b.integrand.complex_value = [c](std::complex<double> z) { return 1.0 / std::sqrt(c - z * z); };
  b.rho_singularity = ellipse_parameter({std::sqrt(c), 0.0});
  return b;
}

BuiltinIntegrand make_rational_pole(double lambda) {
  if (!(lambda > 0.0)) throw ConfigError("integrand 'rational-pole': need lambda > 0");
  BuiltinIntegrand b;
  b.integrand.label = "rational-pole";
  const double l2 = lambda * lambda;
  b.integrand.value = [l2](double x) { return 1.0 / (x * x + l2); };
  b.integrand.derivatives_at_xi = [l2](double xi, int p) {
    max_order("rational-pole", p, 2);
    const double u = xi * xi + l2;
    const std::vector<double> all{1.0 / u, -2.0 * xi / (u * u), (6.0 * xi * xi - 2.0 * l2) / (u * u * u)};
    return std::vector<double>(all.begin(), all.begin() + p + 1);
  };
  b.integrand.complex_value = [l2](std::complex<double> z) { return 1.0 / (z * z + l2); };
  b.rho_singularity = ellipse_parameter({0.0, lambda});
  // |f^(k)(x)| = k! |Im((x - i lambda)^{-k-1})| / lambda <= k! / lambda^{k+2}
  b.derivative_bound = [lambda](int k) {
    return std::exp(std::lgamma(k + 1.0) - (k + 2.0) * std::log(lambda));
  };
  return b;
}

BuiltinIntegrand make_monomial(double d_value) {
  const int d = static_cast<int>(d_value);
  if (d < 0 || static_cast<double>(d) != d_value) {
    throw ConfigError("integrand 'monomial': d must be a non-negative integer");
  }
  BuiltinIntegrand b;
  b.integrand.label = "monomial";
  b.integrand.value = [d](double x) { return std::pow(x, d); };
  b.integrand.derivatives_at_xi = [d](double xi, int p) {
    std::vector<double> out(static_cast<std::size_t>(p + 1), 0.0);
    for (int j = 0; j <= p && j <= d; ++j) {
      double falling = 1.0;
      for (int t = 0; t < j; ++t) falling *= d - t;
      out[static_cast<std::size_t>(j)] = falling * std::pow(xi, d - j);
    }
    return out;
  };
  b.integrand.complex_value = [d](std::complex<double> z) { return std::pow(z, d); };
  b.rho_singularity = kInf;
  b.derivative_bound = [d](int k) {
    if (k > d) return 0.0;
    double falling = 1.0;
    for (int t = 0; t < k; ++t) falling *= d - t;
    return falling;
  };
  return b;
}

bool is_reference_interval(const WeightFamily& w) {
  return w.interval().a == -1.0 && w.interval().b == 1.0;
}

}  // namespace

BuiltinIntegrand make_builtin(const std::string& name, const FunctionParams& params) {
  if (name == "exp") {
    only_keys(name, params, {});
    return make_exp();
  }
  if (name == "inv-sqrt-pole") {
    only_keys(name, params, {"c"});
    return make_inv_sqrt_pole(param_or(params, "c", 1.21));
  }
  if (name == "rational-pole") {
    only_keys(name, params, {"lambda"});
    return make_rational_pole(param_or(params, "lambda", 5.0));
  }
  if (name == "monomial") {
    only_keys(name, params, {"d"});
    return make_monomial(param_or(params, "d", 0.0));
  }
  throw ConfigError("unknown integrand '" + name + "'");
}

std::vector<std::string> builtin_names() { return {"exp", "inv-sqrt-pole", "rational-pole", "monomial"}; }

std::optional<double> builtin_exact(const std::string& name, const FunctionParams& params,
                                    const WeightFamily& w, double xi, int p) {
  if (!is_reference_interval(w)) return std::nullopt;
  try {
    if (name == "exp" && w.kind() == WeightKind::Legendre && (p == 0 || p == 1)) {
      return exact_reference(Example::I1, {xi, p, 0.0}).value;
    }
    if (name == "inv-sqrt-pole" && w.kind() == WeightKind::Legendre && param_or(params, "c", 1.21) == 1.21 &&
        xi == 1e-5 && p == 1) {
      return exact_reference(Example::I2, {xi, p, 0.0}).value;
    }
    if (name == "rational-pole" && w.kind() == WeightKind::Chebyshev1 && p == 1) {
      return exact_reference(Example::I3, {xi, p, param_or(params, "lambda", 5.0)}).value;
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return std::nullopt;
}

std::string format_params(const FunctionParams& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ';';
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    out += key + "=" + std::string(buf, res.ptr);
  }
  return out;
}

FunctionParams parse_params(const std::string& text) {
  FunctionParams params;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ConfigError("integrand parameter '" + item + "' is not of the form key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    double v = 0.0;
    const auto res = std::from_chars(val.data(), val.data() + val.size(), v);
    if (res.ec != std::errc() || res.ptr != val.data() + val.size()) {
      throw ConfigError("integrand parameter '" + key + "': '" + val + "' is not a number");
    }
    params[key] = v;
  }
  return params;
}

}  // namespace hfp
