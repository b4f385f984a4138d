#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hfp/engine.hpp"
#include "hfp/integrands.hpp"
#include "hfp/orthogonal.hpp"

namespace hfp {

inline constexpr const char* kRowSchema = "hfp-rows/1";
inline constexpr const char* kConfigSchema = "hfp-config/1";

enum class ExperimentKind { Table1, Table2, Table3, Fig1, Fig2, Single };
enum class OutputFormat { Csv, Json };

struct WeightSpec {
  std::string kind = "legendre";  // legendre | chebyshev1 | jacobi
  double alpha = 0.0;
  double beta = 0.0;
  double a = -1.0;
  double b = 1.0;
};

struct IntegrandSpec {
  std::string name = "exp";
  FunctionParams params;
};

/// Fixed list of n, or a search over [lo, hi] (or the window [m - delta, m + delta]
/// clipped to n > max(p, 1) when delta >= 0).
struct NPolicy {
  enum class Kind { Fixed, Search };
  Kind kind = Kind::Fixed;
  std::vector<int> values;
  int lo = 0;
  int hi = 0;
  int delta = -1;
  SearchCriterion criterion = SearchCriterion::Reference;
};

/// Singularity locations: explicit values, an arithmetic grid, and/or the
/// midpoints between adjacent Gauss nodes.
struct XiSpec {
  std::vector<double> values;
  std::optional<double> grid_from;
  std::optional<double> grid_to;
  std::optional<double> grid_step;
  bool gauss_midpoints = false;
};

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Single;
  WeightSpec weight;
  IntegrandSpec integrand;
  XiSpec xi;
  int p = 0;
  std::vector<int> m;
  NPolicy n;
  bool include_baseline = false;
  bool include_far_node = false;  // emits the empty comparison column
  bool timing = false;
  std::string output;
  OutputFormat format = OutputFormat::Csv;
};

struct ResultRow {
  std::string experiment;
  std::string method;  // hfp | baseline | far-node
  WeightSpec weight;
  IntegrandSpec integrand;
  double xi = 0.0;
  int p = 0;
  int m = 0;
  int n_used = 0;  // 0 when not applicable
  std::optional<double> approx;
  std::optional<double> exact;
  std::optional<double> abs_error;
  std::optional<double> wall_time;
  std::string status = "ok";
};

[[nodiscard]] WeightFamily make_weight(const WeightSpec& spec);

[[nodiscard]] std::string to_string(ExperimentKind kind);
[[nodiscard]] ExperimentKind parse_experiment_kind(const std::string& text);

/// Throws ConfigError naming the offending field.
void validate(const ExperimentConfig& config);

/// The experiment matrices behind the published tables and figures.
[[nodiscard]] std::vector<ExperimentConfig> preset(ExperimentKind kind);

/// Singularity locations a config expands to, in output order.
[[nodiscard]] std::vector<double> expand_xi(const ExperimentConfig& config, int m);

/// Rows in config order. Row evaluations fan out across OpenMP threads;
/// per-row failures are recorded in the row status and do not stop the run.
[[nodiscard]] std::vector<ResultRow> run_experiment(const ExperimentConfig& config);
[[nodiscard]] std::vector<ResultRow> run_experiments(const std::vector<ExperimentConfig>& configs);

/// Re-evaluates a row from its recorded parameters (hfp rows use n_used as a
/// fixed n, baseline rows ignore it).
[[nodiscard]] double reevaluate(const ResultRow& row);

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out);
void write_json(const std::vector<ResultRow>& rows, std::ostream& out);
[[nodiscard]] std::vector<ResultRow> read_csv(std::istream& in);

/// Config files are JSON: a single object or {"schema": ..., "blocks": [...]}.
[[nodiscard]] std::vector<ExperimentConfig> load_config(const std::string& path);
[[nodiscard]] std::vector<ExperimentConfig> parse_config(const std::string& json_text);
[[nodiscard]] std::string config_to_json(const std::vector<ExperimentConfig>& configs);

/// Worker count from HFP_WORKERS, if set to a positive integer.
[[nodiscard]] std::optional<int> workers_from_env();

/// "%.15e": 16 significant digits, as used for computed values.
[[nodiscard]] std::string format_value(double v);
/// Shortest round-trip representation, as used for input parameters.
[[nodiscard]] std::string format_exact(double v);

}  // namespace hfp
