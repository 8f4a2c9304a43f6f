#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "timeprobe/evaluation.hpp"
#include "timeprobe/event_log.hpp"
#include "timeprobe/recommenders.hpp"

namespace timeprobe {

/// Everything needed to rerun a calibration + evaluation bit-exactly.
struct ExperimentConfig {
  std::string events_path;
  IngestConfig ingest;

  std::vector<Method> methods{Method::probs, Method::heats, Method::hybrid, Method::sims,
                              Method::di,    Method::tprobs, Method::thybrid};
  std::vector<Timestamp> tau_grid{1, 2, 5, 10, 20, 50, 100};
  std::vector<double> lambda_grid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<double> theta_grid{0.5, 0.75, 1.0, 1.25, 1.5, 2.0};
  double epsilon = 1e-9;

  std::size_t list_length = 50;
  Timestamp probe_span = 1;
  double calibration_lo = 0.8;
  double calibration_hi = 0.9;
  double evaluation_lo = 0.9;
  /// Unset: 1 - Delta_P / T_m, i.e. T_P up to T_m - Delta_P.
  std::optional<double> evaluation_hi;
  std::size_t probes = 100;
  double random_fraction = 0.1;
  bool random_probe_baseline = true;
  std::uint64_t seed = 42;

  bool include_untrained_users = true;
  bool drop_cold = false;
};

/// Throws ConfigError on out-of-range fields or overlapping phase windows.
void validate(const ExperimentConfig& config);

/// Key-value config: `key = value` per line, `#` comments, lists separated by
/// commas. Durations (tau, delta_p) accept suffixes resolved against
/// time_unit. Unknown keys are errors.
ExperimentConfig parse_experiment_config(std::istream& in);

/// Sets one config key as if it appeared in a config file. Durations are
/// resolved against the time unit already in `config`. Does not validate.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Resolved config, including defaults, for provenance sidecars.
nlohmann::json to_json(const ExperimentConfig& config);

/// Every parameter point of `method` on the config grids.
std::vector<MethodSpec> expand_grid(const ExperimentConfig& config, Method method);

struct Stat {
  double mean = 0.0;
  double stddev = 0.0;
};

/// Mean and sample standard deviation (0 for a single value).
Stat summarize_values(std::span<const double> values);

struct PointSummary {
  MethodSpec spec;
  std::size_t probes = 0;
  Stat recall;
  Stat ranking_score;
  Stat mean_top_degree;
};

/// Metrics of one (probe, method point).
struct ProbeRecord {
  std::string phase;
  ProbeKind kind = ProbeKind::time;
  std::size_t probe_index = 0;
  std::uint64_t seed = 0;
  Timestamp probe_time = 0;
  Timestamp probe_span = 0;
  MetricsReport report;
  MethodSpec spec;
};

struct SweepResult {
  std::vector<PointSummary> points;
  /// Recall-maximizing point per method; ties go to smaller tau, then
  /// smaller lambda, then smaller theta.
  std::map<Method, MethodSpec> optimum;
  std::size_t probes_used = 0;
  std::size_t probes_skipped = 0;
  std::vector<ProbeRecord> records;
};

/// Picks the optimum per method from point summaries.
std::map<Method, MethodSpec> select_optimum(std::span<const PointSummary> points);

/// Sweeps every method over its grid on time probes with T_P drawn from the
/// calibration range. Probe windows end before the evaluation range starts.
SweepResult calibrate(const EventLog& log, const ExperimentConfig& config);

struct MethodResult {
  std::string probe;
  MethodSpec spec;
  PointSummary summary;
};

struct EvaluationReport {
  /// Time-probe rows in method order, then the random-probe ProbS row.
  std::vector<MethodResult> rows;
  std::size_t probes_used = 0;
  std::size_t probes_skipped = 0;
  std::vector<ProbeRecord> records;
};

/// Out-of-sample evaluation of the chosen points on time probes with T_P in
/// the evaluation range, plus ProbS on random probes when enabled.
EvaluationReport evaluate(const EventLog& log, const ExperimentConfig& config, std::span<const MethodSpec> chosen);

/// Chosen points in method order, from a sweep.
std::vector<MethodSpec> chosen_points(const ExperimentConfig& config, const SweepResult& sweep);

nlohmann::json to_json(const SweepResult& sweep);
nlohmann::json to_json(const EvaluationReport& report);

/// One row per (phase, probe, method point).
void write_records_csv(std::ostream& out, std::span<const ProbeRecord> records);
/// One row per method point with mean/std metrics.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);
/// Table-shaped summary: probe,method,params,recall,ranking_score,k_R (+ std).
void write_report_csv(std::ostream& out, const EvaluationReport& report);

}  // namespace timeprobe
