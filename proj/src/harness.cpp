#include "hfp/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hfp/error.hpp"
#include "hfp/specialfn.hpp"

namespace hfp {

using nlohmann::json;

std::string format_value(double v) {
  if (std::isnan(v)) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15e", v);
  return buf;
}

std::string format_exact(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Table1: return "table1";
    case ExperimentKind::Table2: return "table2";
    case ExperimentKind::Table3: return "table3";
    case ExperimentKind::Fig1: return "fig1";
    case ExperimentKind::Fig2: return "fig2";
    case ExperimentKind::Single: return "single";
  }
  return "?";
}

ExperimentKind parse_experiment_kind(const std::string& text) {
  for (auto k : {ExperimentKind::Table1, ExperimentKind::Table2, ExperimentKind::Table3,
                 ExperimentKind::Fig1, ExperimentKind::Fig2, ExperimentKind::Single}) {
    if (to_string(k) == text) return k;
  }
  throw ConfigError("config.experiment: unknown experiment '" + text + "'");
}

WeightFamily make_weight(const WeightSpec& spec) {
  const Interval iv{spec.a, spec.b};
  if (!(spec.a < spec.b)) throw ConfigError("config.weight: need a < b");
  if (spec.kind == "legendre") return WeightFamily::legendre(iv);
  if (spec.kind == "chebyshev1") return WeightFamily::chebyshev1(iv);
  if (spec.kind == "jacobi") {
    if (!(spec.alpha > -1.0) || !(spec.beta > -1.0)) {
      throw ConfigError("config.weight: Jacobi exponents must exceed -1");
    }
    return WeightFamily::jacobi(spec.alpha, spec.beta, iv);
  }
  throw ConfigError("config.weight.kind: unknown weight '" + spec.kind + "'");
}

std::vector<double> expand_xi(const ExperimentConfig& config, int m) {
  std::vector<double> out = config.xi.values;
  const XiSpec& xs = config.xi;
  if (xs.grid_from && xs.grid_to && xs.grid_step) {
    const double from = *xs.grid_from;
    const double step = *xs.grid_step;
    const long count = std::lround((*xs.grid_to - from) / step);
    for (long k = 0; k <= count; ++k) {
      // Snap to 12 decimals.
      out.push_back(std::round((from + k * step) * 1e12) / 1e12);
    }
  }
  if (xs.gauss_midpoints) {
    const GaussRule rule = gauss_rule(make_weight(config.weight), m);
    for (int k = 0; k + 1 < rule.size(); ++k) {
      out.push_back(0.5 * (rule.nodes[static_cast<std::size_t>(k)] + rule.nodes[static_cast<std::size_t>(k + 1)]));
    }
  }
  return out;
}

void validate(const ExperimentConfig& config) {
  const WeightFamily w = make_weight(config.weight);
  (void)make_builtin(config.integrand.name, config.integrand.params);
  if (config.p < 0) throw ConfigError("config.p: must be non-negative");
  if (config.m.empty()) throw ConfigError("config.m: must be a non-empty list");
  for (int m : config.m) {
    if (m < 1) throw ConfigError("config.m: entries must be positive, got " + std::to_string(m));
  }
  const XiSpec& xs = config.xi;
  const bool partial_grid = xs.grid_from.has_value() || xs.grid_to.has_value() || xs.grid_step.has_value();
  const bool full_grid = xs.grid_from && xs.grid_to && xs.grid_step;
  if (partial_grid && !full_grid) throw ConfigError("config.xi: grid needs from, to and step");
  if (full_grid && !(*xs.grid_step > 0.0 && *xs.grid_to >= *xs.grid_from)) {
    throw ConfigError("config.xi: grid needs step > 0 and to >= from");
  }
  if (xs.values.empty() && !full_grid && !xs.gauss_midpoints) {
    throw ConfigError("config.xi: no singularity locations given");
  }
  for (double xi : expand_xi(config, config.m.front())) {
    if (!w.interval().contains(xi)) {
      std::ostringstream msg;
      msg << "config.xi: singularity outside interval (" << xi << ")";
      throw ConfigError(msg.str());
    }
  }
  const NPolicy& np = config.n;
  if (np.kind == NPolicy::Kind::Fixed) {
    if (np.values.empty()) throw ConfigError("config.n.values: must be a non-empty list");
    for (int n : np.values) {
      if (n <= config.p || n < 2) {
        throw ConfigError("config.n.values: each n must satisfy n > p and n >= 2, got " + std::to_string(n));
      }
    }
  } else if (np.delta < 0) {
    if (np.lo <= config.p || np.lo < 2) throw ConfigError("config.n.lo: must exceed p and be at least 2");
    if (np.hi < np.lo) throw ConfigError("config.n: empty search range");
    if (np.hi > kMaxSearchN) throw ConfigError("config.n.hi: must not exceed 200");
  } else if (np.delta > kMaxSearchN) {
    throw ConfigError("config.n.delta: too large");
  }
}

namespace {

ExperimentConfig base_config(ExperimentKind kind, const std::string& fn, FunctionParams params) {
  ExperimentConfig c;
  c.experiment = kind;
  c.integrand = {fn, std::move(params)};
  return c;
}

NPolicy search_window(int delta) {
  NPolicy np;
  np.kind = NPolicy::Kind::Search;
  np.delta = delta;
  np.criterion = SearchCriterion::Reference;
  return np;
}

NPolicy fixed_n(std::vector<int> values) {
  NPolicy np;
  np.values = std::move(values);
  return np;
}

}  // namespace

std::vector<ExperimentConfig> preset(ExperimentKind kind) {
  std::vector<ExperimentConfig> out;
  switch (kind) {
    case ExperimentKind::Table1:
      for (int p : {0, 1}) {
        ExperimentConfig c = base_config(kind, "exp", {});
        c.xi.values = {1e-5};
        c.p = p;
        c.m = {7, 15};
        c.n = fixed_n({4, 8, 11, 12, 24, 31, 44, 59});
        out.push_back(c);
      }
      break;
    case ExperimentKind::Table2: {
      ExperimentConfig c = base_config(kind, "inv-sqrt-pole", {{"c", 1.21}});
      c.xi.values = {1e-5};
      c.p = 1;
      c.m = {3, 9, 15, 21, 27, 33, 39, 45};
      c.n = search_window(10);
      c.include_baseline = true;
      c.include_far_node = true;
      out.push_back(c);
      break;
    }
    case ExperimentKind::Table3:
      for (double lambda : {1.5, 2.5, 5.0}) {
        ExperimentConfig c = base_config(kind, "rational-pole", {{"lambda", lambda}});
        c.weight.kind = "chebyshev1";
        c.xi.values = {0.25};
        c.p = 1;
        c.m = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
        c.n = search_window(10);
        out.push_back(c);
      }
      break;
    case ExperimentKind::Fig1: {
      ExperimentConfig c = base_config(kind, "exp", {});
      c.xi.grid_from = -0.95;
      c.xi.grid_to = 0.95;
      c.xi.grid_step = 0.05;
      c.xi.gauss_midpoints = true;
      c.p = 0;
      c.m = {7};
      c.n = fixed_n({8});
      out.push_back(c);
      break;
    }
    case ExperimentKind::Fig2: {
      ExperimentConfig c = base_config(kind, "exp", {});
      c.xi.values = {1e-5};
      c.p = 1;
      c.m = {7, 15, 23, 31};
      std::vector<int> ns;
      for (int n = 4; n <= 40; ++n) ns.push_back(n);
      c.n = fixed_n(ns);
      out.push_back(c);
      break;
    }
    case ExperimentKind::Single:
      throw ConfigError("config.experiment: 'single' has no preset; supply a config file");
  }
  return out;
}

namespace {

struct Task {
  std::string method;
  double xi;
  int m;
  int n;  // fixed n, or 0 for search / not applicable
};

ResultRow blank_row(const ExperimentConfig& c, const Task& t) {
  ResultRow r;
  r.experiment = to_string(c.experiment);
  r.method = t.method;
  r.weight = c.weight;
  r.integrand = c.integrand;
  r.xi = t.xi;
  r.p = c.p;
  r.m = t.m;
  r.n_used = t.n;
  return r;
}

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

void run_task(const ExperimentConfig& c, const WeightFamily& w, const BuiltinIntegrand& f,
              const Task& t, ResultRow& row) {
  const auto start = std::chrono::steady_clock::now();
  row.exact = builtin_exact(c.integrand.name, c.integrand.params, w, t.xi, c.p);
  try {
    if (t.method == "far-node") {
      row.status = "NOT-IMPLEMENTED";
      return;
    }
    if (t.method == "baseline") {
      row.approx = evaluate_baseline(f.integrand, w, t.xi, c.p, t.m);
    } else if (c.n.kind == NPolicy::Kind::Fixed) {
      row.approx = evaluate_hfp(f.integrand, w, t.xi, c.p, t.m, t.n).value;
    } else {
      int lo = c.n.lo;
      int hi = c.n.hi;
      if (c.n.delta >= 0) {
        lo = std::max({t.m - c.n.delta, c.p + 1, 2});
        hi = std::min(t.m + c.n.delta, kMaxSearchN);
      }
      if (c.n.criterion == SearchCriterion::Reference && !row.exact) {
        throw ParameterError("reference search needs a known exact value");
      }
      const SearchResult s = search_optimal_n(f.integrand, w, t.xi, c.p, t.m, lo, hi, c.n.criterion, row.exact);
      row.approx = s.best.value;
      row.n_used = s.n_hat;
    }
    if (row.exact) row.abs_error = std::abs(*row.approx - *row.exact);
  } catch (const Error& e) {
    row.status = "error: " + sanitize(e.what());
  }
  if (c.timing) {
    row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
}

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
  validate(config);
  const WeightFamily w = make_weight(config.weight);
  const BuiltinIntegrand f = make_builtin(config.integrand.name, config.integrand.params);

  std::vector<Task> tasks;
  for (int m : config.m) {
    for (double xi : expand_xi(config, m)) {
      if (config.include_baseline) tasks.push_back({"baseline", xi, m, 0});
      if (config.include_far_node) tasks.push_back({"far-node", xi, m, 0});
      if (config.n.kind == NPolicy::Kind::Fixed) {
        for (int n : config.n.values) tasks.push_back({"hfp", xi, m, n});
      } else {
        tasks.push_back({"hfp", xi, m, 0});
      }
    }
  }

  std::vector<ResultRow> rows;
  rows.reserve(tasks.size());
  for (const Task& t : tasks) rows.push_back(blank_row(config, t));

#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    run_task(config, w, f, tasks[i], rows[i]);
  }
  return rows;
}

std::vector<ResultRow> run_experiments(const std::vector<ExperimentConfig>& configs) {
  std::vector<ResultRow> all;
  for (const ExperimentConfig& c : configs) {
    std::vector<ResultRow> rows = run_experiment(c);
    all.insert(all.end(), rows.begin(), rows.end());
  }
  return all;
}

double reevaluate(const ResultRow& row) {
  const WeightFamily w = make_weight(row.weight);
  const BuiltinIntegrand f = make_builtin(row.integrand.name, row.integrand.params);
  if (row.method == "baseline") return evaluate_baseline(f.integrand, w, row.xi, row.p, row.m);
  if (row.method == "hfp") return evaluate_hfp(f.integrand, w, row.xi, row.p, row.m, row.n_used).value;
  throw ParameterError("row method '" + row.method + "' cannot be re-evaluated");
}

namespace {

constexpr const char* kCsvHeader =
    "schema,experiment,method,weight,alpha,beta,a,b,fn,fn_params,xi,p,m,n,approx,exact,abs_error,"
    "wall_time_s,status";

std::string opt_value(const std::optional<double>& v) { return v ? format_value(*v) : "NA"; }

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

double parse_double(const std::string& s, const char* field) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ConfigError(std::string("csv: field '") + field + "' is not a number: '" + s + "'");
  }
  return v;
}

std::optional<double> parse_opt(const std::string& s, const char* field) {
  if (s == "NA") return std::nullopt;
  return parse_double(s, field);
}

int parse_int(const std::string& s, const char* field) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ConfigError(std::string("csv: field '") + field + "' is not an integer: '" + s + "'");
  }
  return v;
}

}  // namespace

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const ResultRow& r : rows) {
    out << kRowSchema << ',' << r.experiment << ',' << r.method << ',' << r.weight.kind << ','
        << format_exact(r.weight.alpha) << ',' << format_exact(r.weight.beta) << ','
        << format_exact(r.weight.a) << ',' << format_exact(r.weight.b) << ',' << r.integrand.name << ','
        << format_params(r.integrand.params) << ',' << format_exact(r.xi) << ',' << r.p << ',' << r.m
        << ',' << r.n_used << ',' << opt_value(r.approx) << ',' << opt_value(r.exact) << ','
        << opt_value(r.abs_error) << ',' << opt_value(r.wall_time) << ',' << sanitize(r.status) << '\n';
  }
}

void write_json(const std::vector<ResultRow>& rows, std::ostream& out) {
  json doc;
  doc["schema"] = kRowSchema;
  doc["rows"] = json::array();
  for (const ResultRow& r : rows) {
    json j;
    j["experiment"] = r.experiment;
    j["method"] = r.method;
    j["weight"] = {{"kind", r.weight.kind}, {"alpha", r.weight.alpha}, {"beta", r.weight.beta},
                   {"a", r.weight.a}, {"b", r.weight.b}};
    j["integrand"] = {{"name", r.integrand.name}, {"params", r.integrand.params}};
    j["xi"] = r.xi;
    j["p"] = r.p;
    j["m"] = r.m;
    j["n"] = r.n_used;
    j["approx"] = opt_json(r.approx);
    j["exact"] = opt_json(r.exact);
    j["abs_error"] = opt_json(r.abs_error);
    j["wall_time_s"] = opt_json(r.wall_time);
    j["status"] = r.status;
    doc["rows"].push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

std::vector<ResultRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw ConfigError("csv: missing or unknown header");
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 19) throw ConfigError("csv: expected 19 fields, got " + std::to_string(f.size()));
    if (f[0] != kRowSchema) throw ConfigError("csv: unknown row schema '" + f[0] + "'");
    ResultRow r;
    r.experiment = f[1];
    r.method = f[2];
    r.weight = {f[3], parse_double(f[4], "alpha"), parse_double(f[5], "beta"), parse_double(f[6], "a"),
                parse_double(f[7], "b")};
    r.integrand = {f[8], parse_params(f[9])};
    r.xi = parse_double(f[10], "xi");
    r.p = parse_int(f[11], "p");
    r.m = parse_int(f[12], "m");
    r.n_used = parse_int(f[13], "n");
    r.approx = parse_opt(f[14], "approx");
    r.exact = parse_opt(f[15], "exact");
    r.abs_error = parse_opt(f[16], "abs_error");
    r.wall_time = parse_opt(f[17], "wall_time_s");
    r.status = f[18];
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

void reject_unknown(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : keys) ok = ok || it.key() == k;
    if (!ok) throw ConfigError(where + ": unknown field '" + it.key() + "'");
  }
}

template <typename T>
T get_field(const json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + "." + key + ": missing or of the wrong type");
  }
}

ExperimentConfig parse_block(const json& j) {
  const std::string where = "config";
  if (!j.is_object()) throw ConfigError("config: each block must be an object");
  reject_unknown(j, {"schema", "experiment", "weight", "integrand", "xi", "p", "m", "n", "baseline",
                     "far_node", "timing", "output", "format"},
                 where);
  ExperimentConfig c;
  c.experiment = parse_experiment_kind(get_field<std::string>(j, "experiment", where));
  if (j.contains("weight")) {
    const json& w = j["weight"];
    reject_unknown(w, {"kind", "alpha", "beta", "a", "b"}, "config.weight");
    c.weight.kind = w.value("kind", c.weight.kind);
    c.weight.alpha = w.value("alpha", 0.0);
    c.weight.beta = w.value("beta", 0.0);
    c.weight.a = w.value("a", -1.0);
    c.weight.b = w.value("b", 1.0);
  }
  if (j.contains("integrand")) {
    const json& f = j["integrand"];
    reject_unknown(f, {"name", "params"}, "config.integrand");
    c.integrand.name = get_field<std::string>(f, "name", "config.integrand");
    if (f.contains("params")) {
      try {
        c.integrand.params = f["params"].get<FunctionParams>();
      } catch (const json::exception&) {
        throw ConfigError("config.integrand.params: must map names to numbers");
      }
    }
  }
  if (!j.contains("xi")) throw ConfigError("config.xi: missing");
  const json& xi = j["xi"];
  if (xi.is_number()) {
    c.xi.values = {xi.get<double>()};
  } else if (xi.is_array()) {
    c.xi.values = get_field<std::vector<double>>(j, "xi", where);
  } else if (xi.is_object()) {
    reject_unknown(xi, {"values", "from", "to", "step", "gauss_midpoints"}, "config.xi");
    if (xi.contains("values")) c.xi.values = get_field<std::vector<double>>(xi, "values", "config.xi");
    if (xi.contains("from")) c.xi.grid_from = get_field<double>(xi, "from", "config.xi");
    if (xi.contains("to")) c.xi.grid_to = get_field<double>(xi, "to", "config.xi");
    if (xi.contains("step")) c.xi.grid_step = get_field<double>(xi, "step", "config.xi");
    c.xi.gauss_midpoints = xi.value("gauss_midpoints", false);
  } else {
    throw ConfigError("config.xi: must be a number, a list, or an object");
  }
  c.p = j.contains("p") ? get_field<int>(j, "p", where) : 0;
  if (!j.contains("m")) throw ConfigError("config.m: missing");
  c.m = j["m"].is_number() ? std::vector<int>{get_field<int>(j, "m", where)}
                           : get_field<std::vector<int>>(j, "m", where);
  if (!j.contains("n")) throw ConfigError("config.n: missing");
  const json& n = j["n"];
  reject_unknown(n, {"policy", "values", "lo", "hi", "delta", "criterion"}, "config.n");
  const std::string policy = get_field<std::string>(n, "policy", "config.n");
  if (policy == "fixed") {
    c.n.kind = NPolicy::Kind::Fixed;
    c.n.values = get_field<std::vector<int>>(n, "values", "config.n");
  } else if (policy == "search") {
    c.n.kind = NPolicy::Kind::Search;
    c.n.lo = n.value("lo", 0);
    c.n.hi = n.value("hi", 0);
    c.n.delta = n.value("delta", -1);
    const std::string crit = n.value("criterion", std::string("reference"));
    if (crit == "reference") {
      c.n.criterion = SearchCriterion::Reference;
    } else if (crit == "stabilization") {
      c.n.criterion = SearchCriterion::Stabilization;
    } else {
      throw ConfigError("config.n.criterion: expected 'reference' or 'stabilization'");
    }
  } else {
    throw ConfigError("config.n.policy: expected 'fixed' or 'search'");
  }
  c.include_baseline = j.value("baseline", false);
  c.include_far_node = j.value("far_node", false);
  c.timing = j.value("timing", false);
  c.output = j.value("output", std::string());
  const std::string fmt = j.value("format", std::string("csv"));
  if (fmt == "csv") {
    c.format = OutputFormat::Csv;
  } else if (fmt == "json") {
    c.format = OutputFormat::Json;
  } else {
    throw ConfigError("config.format: expected 'csv' or 'json'");
  }
  validate(c);
  return c;
}

json block_to_json(const ExperimentConfig& c) {
  json j;
  j["experiment"] = to_string(c.experiment);
  j["weight"] = {{"kind", c.weight.kind}, {"alpha", c.weight.alpha}, {"beta", c.weight.beta},
                 {"a", c.weight.a}, {"b", c.weight.b}};
  j["integrand"] = {{"name", c.integrand.name}, {"params", c.integrand.params}};
  json xi = json::object();
  if (!c.xi.values.empty()) xi["values"] = c.xi.values;
  if (c.xi.grid_from) xi["from"] = *c.xi.grid_from;
  if (c.xi.grid_to) xi["to"] = *c.xi.grid_to;
  if (c.xi.grid_step) xi["step"] = *c.xi.grid_step;
  if (c.xi.gauss_midpoints) xi["gauss_midpoints"] = true;
  j["xi"] = xi;
  j["p"] = c.p;
  j["m"] = c.m;
  if (c.n.kind == NPolicy::Kind::Fixed) {
    j["n"] = {{"policy", "fixed"}, {"values", c.n.values}};
  } else {
    j["n"] = {{"policy", "search"},
              {"criterion", c.n.criterion == SearchCriterion::Reference ? "reference" : "stabilization"}};
    if (c.n.delta >= 0) {
      j["n"]["delta"] = c.n.delta;
    } else {
      j["n"]["lo"] = c.n.lo;
      j["n"]["hi"] = c.n.hi;
    }
  }
  j["baseline"] = c.include_baseline;
  j["far_node"] = c.include_far_node;
  j["timing"] = c.timing;
  if (!c.output.empty()) j["output"] = c.output;
  j["format"] = c.format == OutputFormat::Csv ? "csv" : "json";
  return j;
}

}  // namespace

std::vector<ExperimentConfig> parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: not valid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("schema") && doc["schema"] != kConfigSchema) {
    throw ConfigError("config.schema: expected '" + std::string(kConfigSchema) + "'");
  }
  std::vector<ExperimentConfig> out;
  if (doc.is_object() && doc.contains("blocks")) {
    reject_unknown(doc, {"schema", "blocks"}, "config");
    if (!doc["blocks"].is_array() || doc["blocks"].empty()) {
      throw ConfigError("config.blocks: must be a non-empty list");
    }
    for (const json& b : doc["blocks"]) out.push_back(parse_block(b));
  } else {
    out.push_back(parse_block(doc));
  }
  return out;
}

std::vector<ExperimentConfig> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const std::vector<ExperimentConfig>& configs) {
  json doc;
  doc["schema"] = kConfigSchema;
  doc["blocks"] = json::array();
  for (const ExperimentConfig& c : configs) doc["blocks"].push_back(block_to_json(c));
  return doc.dump(2);
}

std::optional<int> workers_from_env() {
  const char* v = std::getenv("HFP_WORKERS");
  if (v == nullptr) return std::nullopt;
  int n = 0;
  const std::string s(v);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), n);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || n < 1) return std::nullopt;
  return n;
}

}  // namespace hfp
