#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

#include <omp.h>

#include "hfp/error.hpp"
#include "hfp/harness.hpp"

using namespace hfp;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.experiment = ExperimentKind::Single;
  c.integrand.name = "exp";
  c.xi.values = {1e-5, 0.4};
  c.p = 0;
  c.m = {5, 7};
  c.n.kind = NPolicy::Kind::Fixed;
  c.n.values = {6, 8};
  c.include_baseline = true;
  return c;
}

std::string csv_of(const std::vector<ResultRow>& rows) {
  std::ostringstream os;
  write_csv(rows, os);
  return os.str();
}

}  // namespace

TEST_CASE("validation names the offending field") {
  ExperimentConfig c = small_config();
  c.m.clear();
  CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("config.m"), ConfigError);
  c = small_config();
  c.n.values = {0};
  CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("config.n.values"), ConfigError);
  c = small_config();
  c.xi.values = {1.5};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small_config();
  c.weight.kind = "hermite";
  CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("config.weight.kind"), ConfigError);
  c = small_config();
  c.n.kind = NPolicy::Kind::Search;
  c.n.lo = 5;
  c.n.hi = 300;
  CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("config.n.hi"), ConfigError);
  CHECK_NOTHROW(validate(small_config()));
}

TEST_CASE("JSON config parsing") {
  const std::string text = R"({"schema": "hfp-config/1", "blocks": [
    {"experiment": "single", "integrand": {"name": "exp"}, "xi": 0.1, "p": 1, "m": [7, 9],
     "n": {"policy": "fixed", "values": [8]}},
    {"experiment": "single", "weight": {"kind": "chebyshev1"}, "integrand": {"name": "rational-pole", "params": {"lambda": 2.5}},
     "xi": {"from": -0.5, "to": 0.5, "step": 0.25}, "p": 1, "m": 6, "n": {"policy": "search", "lo": 4, "hi": 20, "criterion": "stabilization"}}
  ]})";
  const auto configs = parse_config(text);
  REQUIRE(configs.size() == 2);
  CHECK(configs[0].m == std::vector<int>{7, 9});
  CHECK(configs[0].xi.values == std::vector<double>{0.1});
  CHECK(configs[1].n.kind == NPolicy::Kind::Search);
  CHECK(configs[1].n.criterion == SearchCriterion::Stabilization);
  CHECK(configs[1].integrand.params.at("lambda") == 2.5);
  CHECK(expand_xi(configs[1], 6).size() == 5);

  const auto again = parse_config(config_to_json(configs));
  REQUIRE(again.size() == 2);
  CHECK(again[1].xi.grid_step == configs[1].xi.grid_step);
  CHECK(again[0].n.values == configs[0].n.values);

  CHECK_THROWS_WITH_AS((void)parse_config(R"({"experiment": "single", "xi": 0.1, "m": [], "n": {"policy": "fixed", "values": [8]}})"),
                       doctest::Contains("config.m"), ConfigError);
  CHECK_THROWS_WITH_AS((void)parse_config(R"({"experiment": "single", "xi": 0.1, "m": [7], "nn": 3, "n": {"policy": "fixed", "values": [8]}})"),
                       doctest::Contains("unknown field 'nn'"), ConfigError);
  CHECK_THROWS_AS((void)parse_config("{not json"), ConfigError);
  CHECK_THROWS_AS((void)parse_config(R"({"schema": "other", "blocks": []})"), ConfigError);
}

TEST_CASE("presets validate and cover the expected matrices") {
  for (ExperimentKind k : {ExperimentKind::Table1, ExperimentKind::Table2, ExperimentKind::Table3,
                           ExperimentKind::Fig1, ExperimentKind::Fig2}) {
    const auto blocks = preset(k);
    CHECK(!blocks.empty());
    for (const auto& b : blocks) CHECK_NOTHROW(validate(b));
  }
  std::set<double> lambdas;
  for (const auto& b : preset(ExperimentKind::Table3)) lambdas.insert(b.integrand.params.at("lambda"));
  CHECK(lambdas == std::set<double>{1.5, 2.5, 5.0});
  const auto fig1 = preset(ExperimentKind::Fig1);
  CHECK(expand_xi(fig1.front(), 7).size() == 39 + 6);
  CHECK_THROWS_AS((void)preset(ExperimentKind::Single), ConfigError);
  CHECK(parse_experiment_kind("table2") == ExperimentKind::Table2);
  CHECK(to_string(ExperimentKind::Fig2) == "fig2");
  CHECK_THROWS_AS((void)parse_experiment_kind("table9"), ConfigError);
}

TEST_CASE("row structure") {
  const auto rows = run_experiment(small_config());
  CHECK(rows.size() == 2 * 2 * 3);
  int baseline = 0;
  for (const ResultRow& r : rows) {
    CHECK(r.status == "ok");
    CHECK(r.exact.has_value());
    CHECK(*r.abs_error == std::abs(*r.approx - *r.exact));
    CHECK(!r.wall_time.has_value());
    if (r.method == "baseline") {
      ++baseline;
      CHECK(r.n_used == 0);
    }
  }
  CHECK(baseline == 4);
}

TEST_CASE("table2 rows include the baseline and the far-node marker") {
  auto blocks = preset(ExperimentKind::Table2);
  for (auto& b : blocks) b.m = {3, 9};
  const auto rows = run_experiments(blocks);
  std::set<std::string> methods;
  for (const ResultRow& r : rows) {
    methods.insert(r.method);
    if (r.method == "far-node") CHECK(r.status == "NOT-IMPLEMENTED");
  }
  CHECK(methods == std::set<std::string>{"hfp", "baseline", "far-node"});
}

TEST_CASE("per-row failures are recorded, not thrown") {
  ExperimentConfig c = small_config();
  c.xi.values = {0.0};
  c.n.values = {5};
  c.include_baseline = false;
  const auto rows = run_experiment(c);
  REQUIRE(!rows.empty());
  for (const ResultRow& r : rows) CHECK(r.status.rfind("error:", 0) == 0);
}

TEST_CASE("CSV round trip reproduces values bit for bit") {
  const auto rows = run_experiment(small_config());
  const std::string text = csv_of(rows);
  CHECK(text.rfind("schema,experiment,method,", 0) == 0);
  std::istringstream in(text);
  const auto back = read_csv(in);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].method == rows[i].method);
    CHECK(back[i].xi == rows[i].xi);
    CHECK(back[i].n_used == rows[i].n_used);
    CHECK(reevaluate(back[i]) == *rows[i].approx);
  }
  CHECK(csv_of(back) == text);
  std::istringstream bad("nonsense\n");
  CHECK_THROWS_AS((void)read_csv(bad), ConfigError);
}

TEST_CASE("JSON row output") {
  const auto rows = run_experiment(small_config());
  std::ostringstream os;
  write_json(rows, os);
  const std::string s = os.str();
  CHECK(s.find("\"schema\"") != std::string::npos);
  CHECK(s.find(kRowSchema) != std::string::npos);
  CHECK(s.find("\"baseline\"") != std::string::npos);
}

TEST_CASE("output is independent of the worker count") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const std::string one = csv_of(run_experiments(preset(ExperimentKind::Table1)));
  omp_set_num_threads(4);
  const std::string four = csv_of(run_experiments(preset(ExperimentKind::Table1)));
  omp_set_num_threads(saved);
  CHECK(one == four);
}

TEST_CASE("worker count from the environment") {
  setenv("HFP_WORKERS", "3", 1);
  CHECK(workers_from_env() == 3);
  setenv("HFP_WORKERS", "zero", 1);
  CHECK(!workers_from_env().has_value());
  unsetenv("HFP_WORKERS");
  CHECK(!workers_from_env().has_value());
}

TEST_CASE("number formatting") {
  CHECK(format_value(std::nan("")) == "NA");
  CHECK(format_value(1.0) == "1.000000000000000e+00");
  CHECK(format_exact(1e-5) == "1e-05");
  CHECK(std::stod(format_exact(0.1 + 0.2)) == 0.1 + 0.2);
}
