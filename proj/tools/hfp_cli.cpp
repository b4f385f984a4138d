#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hfp/bounds.hpp"
#include "hfp/engine.hpp"
#include "hfp/error.hpp"
#include "hfp/harness.hpp"
#include "hfp/integrands.hpp"
#include "oracle/oracles.hpp"

namespace {

using nlohmann::json;

constexpr const char* kEvalSchema = "hfp-eval/1";
constexpr const char* kBoundSchema = "hfp-bound/1";
constexpr const char* kSelftestSchema = "hfp-selftest/1";

struct FnOptions {
  std::string weight = "legendre";
  double alpha = 0.0;
  double beta = 0.0;
  double a = -1.0;
  double b = 1.0;
  std::string fn = "exp";
  std::vector<std::string> fn_params;
};

void add_fn_options(CLI::App* cmd, FnOptions& o) {
  cmd->add_option("--weight", o.weight, "legendre | chebyshev1 | jacobi")->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "Jacobi exponent at b")->capture_default_str();
  cmd->add_option("--beta", o.beta, "Jacobi exponent at a")->capture_default_str();
  cmd->add_option("--a", o.a, "left end of the interval")->capture_default_str();
  cmd->add_option("--b", o.b, "right end of the interval")->capture_default_str();
  cmd->add_option("--fn", o.fn, "builtin integrand: exp | inv-sqrt-pole | rational-pole | monomial")
      ->capture_default_str();
  cmd->add_option("--fn-param", o.fn_params, "integrand parameter k=v (repeatable)");
}

hfp::FunctionParams collect_params(const std::vector<std::string>& items) {
  std::string joined;
  for (const std::string& s : items) {
    if (!joined.empty()) joined += ';';
    joined += s;
  }
  return hfp::parse_params(joined);
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw hfp::ConfigError("--search-n: expected lo:hi");
  try {
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw hfp::ConfigError("--search-n: expected integers lo:hi, got '" + text + "'");
  }
}

struct EvalOptions {
  FnOptions fn;
  double xi = 0.0;
  int p = 0;
  int m = 7;
  int n = 0;
  std::string search;
  std::string criterion = "stabilization";
  bool json = false;
};

int run_eval(const EvalOptions& o) {
  const hfp::WeightFamily w = hfp::make_weight({o.fn.weight, o.fn.alpha, o.fn.beta, o.fn.a, o.fn.b});
  const hfp::FunctionParams params = collect_params(o.fn.fn_params);
  const hfp::BuiltinIntegrand f = hfp::make_builtin(o.fn.fn, params);
  if (!w.interval().contains(o.xi)) {
    throw hfp::DomainError("singularity outside interval: xi = " + hfp::format_exact(o.xi) + " not in (" +
                           hfp::format_exact(o.fn.a) + ", " + hfp::format_exact(o.fn.b) + ")");
  }
  const std::optional<double> exact = hfp::builtin_exact(o.fn.fn, params, w, o.xi, o.p);
  hfp::QuadratureResult r;
  std::optional<int> n_hat;
  if (!o.search.empty()) {
    const auto [lo, hi] = parse_range(o.search);
    hfp::SearchCriterion crit = hfp::SearchCriterion::Stabilization;
    if (o.criterion == "reference") {
      if (!exact) throw hfp::ConfigError("--criterion reference: no exact value known for this integrand");
      crit = hfp::SearchCriterion::Reference;
    } else if (o.criterion != "stabilization") {
      throw hfp::ConfigError("--criterion: expected reference or stabilization");
    }
    const hfp::SearchResult s = hfp::search_optimal_n(f.integrand, w, o.xi, o.p, o.m, lo, hi, crit, exact);
    r = s.best;
    n_hat = s.n_hat;
  } else {
    if (o.n <= 0) throw hfp::ConfigError("eval: give --n or --search-n");
    r = hfp::evaluate_hfp(f.integrand, w, o.xi, o.p, o.m, o.n);
  }
  if (o.json) {
    json j;
    j["schema"] = kEvalSchema;
    j["value"] = r.value;
    j["gauss_sum"] = r.gauss_sum;
    j["moment_sum"] = r.moment_sum;
    j["m"] = r.parameters.m;
    j["n"] = r.parameters.n;
    j["nu"] = r.parameters.nu;
    j["h"] = r.parameters.h;
    j["p"] = r.parameters.p;
    j["xi"] = r.parameters.xi;
    j["closest_indices"] = r.closest_indices;
    j["exact"] = exact ? json(*exact) : json(nullptr);
    j["abs_error"] = exact ? json(std::abs(r.value - *exact)) : json(nullptr);
    j["searched"] = n_hat.has_value();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "schema " << kEvalSchema << '\n'
              << "value " << hfp::format_value(r.value) << '\n'
              << "m " << r.parameters.m << '\n'
              << "n " << r.parameters.n << '\n'
              << "nu " << r.parameters.nu << '\n'
              << "h " << hfp::format_value(r.parameters.h) << '\n';
    if (exact) {
      std::cout << "exact " << hfp::format_value(*exact) << '\n'
                << "abs_error " << hfp::format_value(std::abs(r.value - *exact)) << '\n';
    }
  }
  return 0;
}

struct ReproduceOptions {
  std::string experiment;
  std::string out;
  std::string format = "csv";
  std::string config;
  bool timing = false;
};

int run_reproduce(const ReproduceOptions& o) {
  std::vector<hfp::ExperimentConfig> configs;
  if (!o.config.empty()) {
    configs = hfp::load_config(o.config);
  } else {
    if (o.experiment.empty()) throw hfp::ConfigError("reproduce: name an experiment or pass --config");
    configs = hfp::preset(hfp::parse_experiment_kind(o.experiment));
  }
  if (o.format != "csv" && o.format != "json") throw hfp::ConfigError("--format: expected csv or json");
  for (auto& c : configs) c.timing = c.timing || o.timing;
  const std::vector<hfp::ResultRow> rows = hfp::run_experiments(configs);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw hfp::ConfigError("--out: cannot write '" + o.out + "'");
    out = &file;
  }
  if (o.format == "csv") {
    hfp::write_csv(rows, *out);
  } else {
    hfp::write_json(rows, *out);
  }
  return 0;
}

struct BoundOptions {
  FnOptions fn;
  int m = 7;
  int n = 8;
  int p = 0;
  std::optional<double> rho;
  std::optional<double> M;
  std::optional<double> M1;
  std::optional<double> M2;
  std::string variant = "hunter";
  bool n_plus_one_base = false;
  int samples = 256;
  bool json = false;
};

json report_json(const hfp::BoundReport& r) {
  return {{"rho", r.inputs.rho},         {"M", r.inputs.M},
          {"M_estimated", r.m_estimated}, {"M1", r.inputs.M1},
          {"M2", r.inputs.M2},           {"gauss_term", r.gauss_term},
          {"interp_term", r.interp_term}, {"total", r.total}};
}

int run_bound(const BoundOptions& o) {
  const hfp::FunctionParams params = collect_params(o.fn.fn_params);
  const hfp::BuiltinIntegrand f = hfp::make_builtin(o.fn.fn, params);
  hfp::GaussBoundVariant variant = hfp::GaussBoundVariant::Hunter;
  if (o.variant == "kambo") {
    variant = hfp::GaussBoundVariant::Kambo;
  } else if (o.variant != "hunter") {
    throw hfp::ConfigError("--variant: expected hunter or kambo");
  }
  const hfp::InterpBase base = o.n_plus_one_base ? hfp::InterpBase::NPlusOne : hfp::InterpBase::N;
  auto derivative_max = [&](const std::optional<double>& given, int order, const char* flag) {
    if (given) return *given;
    if (!f.derivative_bound) {
      throw hfp::ConfigError(std::string(flag) + ": required, no derivative bound is known for " + o.fn.fn);
    }
    return f.derivative_bound(order);
  };
  const double M1 = derivative_max(o.M1, o.n + 1, "--M1");
  const double M2 = derivative_max(o.M2, o.n + 2, "--M2");
  std::vector<hfp::BoundReport> reports;
  hfp::BoundReport best;
  if (o.rho) {
    double M = 0.0;
    if (o.M) {
      M = *o.M;
    } else {
      M = hfp::max_on_ellipse(f.integrand.complex_value, {*o.rho, o.samples});
    }
    best = hfp::quadrature_error_bound(*o.rho, M, o.m, o.fn.alpha, o.fn.beta, M1, M2, o.n, o.p, variant, base);
    best.m_estimated = !o.M;
    reports.push_back(best);
  } else {
    const hfp::RhoScan scan = hfp::scan_rho(f.integrand.complex_value, f.rho_singularity, o.m, o.fn.alpha,
                                            o.fn.beta, M1, M2, o.n, o.p, variant, base, o.M, o.samples);
    best = scan.best;
    reports = scan.all;
  }
  if (o.json) {
    json j;
    j["schema"] = kBoundSchema;
    j["variant"] = o.variant;
    j["interp_base"] = o.n_plus_one_base ? "n+1" : "n";
    j["m"] = o.m;
    j["n"] = o.n;
    j["p"] = o.p;
    j["best"] = report_json(best);
    j["scan"] = json::array();
    for (const auto& r : reports) j["scan"].push_back(report_json(r));
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "schema " << kBoundSchema << '\n'
              << "rho,M,M_estimated,gauss_term,interp_term,total\n";
    for (const auto& r : reports) {
      std::cout << hfp::format_exact(r.inputs.rho) << ',' << hfp::format_value(r.inputs.M) << ','
                << (r.m_estimated ? "ESTIMATED" : "GIVEN") << ',' << hfp::format_value(r.gauss_term) << ','
                << hfp::format_value(r.interp_term) << ',' << hfp::format_value(r.total) << '\n';
    }
    std::cout << "best_rho " << hfp::format_exact(best.inputs.rho) << '\n'
              << "best_total " << hfp::format_value(best.total) << '\n';
  }
  return 0;
}

int run_selftest(const std::vector<int>& only) {
  std::vector<hfp::oracle::Check> checks;
  if (only.empty()) {
    checks = hfp::oracle::run_all_checks();
  } else {
    for (int id : only) checks.push_back(hfp::oracle::run_check(id));
  }
  std::cout << "schema " << kSelftestSchema << '\n';
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.passed;
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.id << ' ' << c.name << ": " << c.detail << '\n';
  }
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-part integral quadrature"};
  app.require_subcommand(1);
  std::optional<int> workers;
  app.add_option("--workers", workers, "thread count (overrides HFP_WORKERS)")->check(CLI::PositiveNumber);

  EvalOptions eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one finite-part integral");
  add_fn_options(eval_cmd, eval.fn);
  eval_cmd->add_option("--xi", eval.xi, "singularity")->required();
  eval_cmd->add_option("--p", eval.p, "order (singularity power is p+1)")->capture_default_str();
  eval_cmd->add_option("--m", eval.m, "Gauss points")->capture_default_str();
  auto* n_opt = eval_cmd->add_option("--n", eval.n, "interpolation degree");
  auto* s_opt = eval_cmd->add_option("--search-n", eval.search, "search n over lo:hi");
  n_opt->excludes(s_opt);
  eval_cmd->add_option("--criterion", eval.criterion, "reference | stabilization")->capture_default_str();
  eval_cmd->add_flag("--json", eval.json, "JSON output");

  ReproduceOptions repro;
  CLI::App* repro_cmd = app.add_subcommand("reproduce", "run a benchmark experiment");
  repro_cmd->add_option("experiment", repro.experiment, "table1 | table2 | table3 | fig1 | fig2");
  repro_cmd->add_option("--out", repro.out, "output file (stdout if omitted)");
  repro_cmd->add_option("--format", repro.format, "csv | json")->capture_default_str();
  repro_cmd->add_option("--config", repro.config, "JSON experiment configuration");
  repro_cmd->add_flag("--timing", repro.timing, "record wall time per row");

  BoundOptions bound;
  CLI::App* bound_cmd = app.add_subcommand("bound", "error bound for H*_{m,n,p}");
  add_fn_options(bound_cmd, bound.fn);
  bound_cmd->add_option("--m", bound.m)->capture_default_str();
  bound_cmd->add_option("--n", bound.n)->capture_default_str();
  bound_cmd->add_option("--p", bound.p)->capture_default_str();
  bound_cmd->add_option("--rho", bound.rho, "single ellipse parameter instead of the grid scan");
  bound_cmd->add_option("--M", bound.M, "override max |f| on the ellipse");
  bound_cmd->add_option("--M1", bound.M1, "override max |f^(n+1)|");
  bound_cmd->add_option("--M2", bound.M2, "override max |f^(n+2)|");
  bound_cmd->add_option("--variant", bound.variant, "hunter | kambo")->capture_default_str();
  bound_cmd->add_flag("--base-n-plus-1", bound.n_plus_one_base, "use (1+(p+2)/(n+1)) in the interpolation term");
  bound_cmd->add_option("--samples", bound.samples, "ellipse samples")->capture_default_str();
  bound_cmd->add_flag("--json", bound.json, "JSON output");

  std::vector<int> only;
  CLI::App* self_cmd = app.add_subcommand("selftest", "run the oracle property checks");
  self_cmd->add_option("--only", only, "criterion ids to run, e.g. 1,9")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (workers) {
    omp_set_num_threads(*workers);
  } else if (auto env = hfp::workers_from_env()) {
    omp_set_num_threads(*env);
  }

  try {
    if (*eval_cmd) return run_eval(eval);
    if (*repro_cmd) return run_reproduce(repro);
    if (*bound_cmd) return run_bound(bound);
    if (*self_cmd) return run_selftest(only);
  } catch (const hfp::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const hfp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
