#include "timeprobe/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "timeprobe/duration.hpp"
#include "timeprobe/error.hpp"
#include "timeprobe/format.hpp"
#include "timeprobe/rng.hpp"

namespace timeprobe {
namespace {

constexpr std::uint64_t kCalibrationStream = 1;
constexpr std::uint64_t kEvaluationStream = 2;
constexpr std::uint64_t kRandomStream = 3;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto end = s.find(',', start);
    auto part = trim(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (!part.empty()) out.push_back(std::move(part));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

double to_double(const std::string& key, const std::string& text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError("'" + key + "': invalid number '" + text + "'");
  return value;
}

std::uint64_t to_unsigned(const std::string& key, const std::string& text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError("'" + key + "': invalid non-negative integer '" + text + "'");
  return value;
}

bool to_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "yes" || text == "1" || text == "on") return true;
  if (text == "false" || text == "no" || text == "0" || text == "off") return false;
  throw ConfigError("'" + key + "': invalid boolean '" + text + "'");
}

char to_delimiter(const std::string& text) {
  if (text == "tab" || text == "\\t") return '\t';
  if (text == "comma" || text == ",") return ',';
  if (text == "space" || text == "whitespace") return ' ';
  if (text == "semicolon" || text == ";") return ';';
  if (text.size() == 1) return text.front();
  throw ConfigError("invalid delimiter '" + text + "'");
}

std::string delimiter_name(char c) {
  switch (c) {
    case '\t':
      return "tab";
    case ',':
      return "comma";
    case ' ':
      return "space";
    default:
      return std::string(1, c);
  }
}

void apply_columns(IngestConfig& ingest, const std::string& text) {
  const auto names = split_list(text);
  bool user = false;
  bool item = false;
  bool time = false;
  ingest.rating_column.reset();
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& n = names[i];
    if (n == "user") {
      ingest.user_column = i;
      user = true;
    } else if (n == "item") {
      ingest.item_column = i;
      item = true;
    } else if (n == "time" || n == "timestamp") {
      ingest.time_column = i;
      time = true;
    } else if (n == "rating") {
      ingest.rating_column = i;
    } else if (n != "_" && n != "skip") {
      throw ConfigError("columns: unknown column name '" + n + "'");
    }
  }
  if (!user || !item || !time) throw ConfigError("columns must name user, item and time");
}

std::string columns_text(const IngestConfig& ingest) {
  std::size_t width = std::max({ingest.user_column, ingest.item_column, ingest.time_column}) + 1;
  if (ingest.rating_column) width = std::max(width, *ingest.rating_column + 1);
  std::vector<std::string> names(width, "_");
  names[ingest.user_column] = "user";
  names[ingest.item_column] = "item";
  names[ingest.time_column] = "time";
  if (ingest.rating_column) names[*ingest.rating_column] = "rating";
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out;
}

std::pair<double, std::optional<double>> parse_range(const std::string& key, const std::string& text) {
  const auto parts = split_list(text);
  if (parts.size() != 2) throw ConfigError("'" + key + "' expects two comma-separated values");
  const double lo = to_double(key, parts[0]);
  if (parts[1] == "auto") return {lo, std::nullopt};
  return {lo, to_double(key, parts[1])};
}

Timestamp evaluation_start(const EventLog& log, const ExperimentConfig& config) {
  return static_cast<Timestamp>(std::ceil(config.evaluation_lo * static_cast<double>(log.max_time()) - 1e-9));
}

EvaluationOptions evaluation_options(const ExperimentConfig& config) {
  EvaluationOptions options;
  options.list_length = config.list_length;
  options.include_untrained_users = config.include_untrained_users;
  options.execution = Execution::parallel;
  return options;
}

/// Scores `points` on one split and appends records. Returns false when the
/// split cannot be evaluated (empty probe or no evaluable users).
bool run_probe(const ProbeSplit& raw_split, const ExperimentConfig& config, std::span<const MethodSpec> points,
               const std::string& phase, std::size_t probe_index, std::uint64_t seed,
               std::vector<std::vector<MetricsReport>>& per_point, std::vector<ProbeRecord>& records) {
  const ProbeSplit split = config.drop_cold ? drop_cold_items(raw_split) : raw_split;
  if (split.status == ProbeStatus::empty_probe) return false;
  std::vector<MetricsReport> reports;
  try {
    reports = evaluate_split(split, points, evaluation_options(config));
  } catch (const UndefinedMetricError&) {
    return false;
  }
  for (std::size_t m = 0; m < points.size(); ++m) {
    ProbeRecord record;
    record.phase = phase;
    record.kind = split.kind;
    record.probe_index = probe_index;
    record.seed = seed;
    record.probe_time = split.probe_time;
    record.probe_span = split.probe_span;
    record.report = reports[m];
    record.spec = points[m];
    records.push_back(std::move(record));
    per_point[m].push_back(std::move(reports[m]));
  }
  return true;
}

PointSummary summarize_point(const MethodSpec& spec, std::span<const MetricsReport> reports) {
  std::vector<double> recall;
  std::vector<double> ranking;
  std::vector<double> degree;
  for (const auto& r : reports) {
    recall.push_back(r.recall);
    ranking.push_back(r.ranking_score);
    degree.push_back(r.mean_top_degree);
  }
  PointSummary s;
  s.spec = spec;
  s.probes = reports.size();
  s.recall = summarize_values(recall);
  s.ranking_score = summarize_values(ranking);
  s.mean_top_degree = summarize_values(degree);
  return s;
}

nlohmann::json stat_json(const Stat& s) { return {{"mean", s.mean}, {"std", s.stddev}}; }

nlohmann::json summary_json(const PointSummary& s) {
  nlohmann::json j;
  j["method"] = to_string(s.spec.method);
  j["label"] = s.spec.label();
  j["params"] = params_json(s.spec);
  j["probes"] = s.probes;
  j["recall"] = stat_json(s.recall);
  j["ranking_score"] = stat_json(s.ranking_score);
  j["k_R"] = stat_json(s.mean_top_degree);
  return j;
}

void write_param_columns(std::ostream& out, const MethodSpec& spec) {
  out << to_string(spec.method) << ',';
  if (is_temporal(spec.method)) out << spec.params.tau;
  out << ',';
  if (uses_lambda(spec.method)) out << format_number(spec.params.lambda);
  out << ',';
  if (uses_theta(spec.method)) out << format_number(spec.params.theta);
}

}  // namespace

void validate(const ExperimentConfig& c) {
  if (c.methods.empty()) throw ConfigError("no methods configured");
  if (c.list_length < 1) throw ConfigError("list_length must be at least 1");
  if (c.probes < 1) throw ConfigError("probes must be at least 1");
  if (c.probe_span < 1) throw ConfigError("delta_p must be positive");
  if (!(c.epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (!(c.random_fraction > 0.0 && c.random_fraction < 1.0)) throw ConfigError("random_fraction must lie in (0, 1)");
  if (!(0.0 <= c.calibration_lo && c.calibration_lo <= c.calibration_hi && c.calibration_hi <= 1.0))
    throw ConfigError("calibration_range must satisfy 0 <= lo <= hi <= 1");
  const double eval_hi = c.evaluation_hi.value_or(1.0);
  if (!(0.0 <= c.evaluation_lo && c.evaluation_lo <= eval_hi && eval_hi <= 1.0))
    throw ConfigError("evaluation_range must satisfy 0 <= lo <= hi <= 1");
  if (c.calibration_hi > c.evaluation_lo)
    throw ConfigError("calibration range must end before the evaluation range starts");

  bool need_tau = false;
  bool need_lambda = false;
  bool need_theta = false;
  for (const auto m : c.methods) {
    need_tau |= is_temporal(m);
    need_lambda |= uses_lambda(m);
    need_theta |= uses_theta(m);
  }
  if (need_tau && c.tau_grid.empty()) throw ConfigError("tau grid is empty");
  if (need_lambda && c.lambda_grid.empty()) throw ConfigError("lambda grid is empty");
  if (need_theta && c.theta_grid.empty()) throw ConfigError("theta grid is empty");
  for (const auto tau : c.tau_grid)
    if (tau <= 0) throw ConfigError("tau values must be positive");
  for (const double l : c.lambda_grid)
    if (!(l >= 0.0 && l <= 1.0)) throw ConfigError("lambda values must lie in [0, 1]");
  for (const double t : c.theta_grid)
    if (!(t > 0.0)) throw ConfigError("theta values must be positive");
}

void apply_setting(ExperimentConfig& c, const std::string& key, const std::string& value) {
  if (key == "time_unit") {
    c.ingest.time_unit = value;
  } else if (key == "events") {
    c.events_path = value;
  } else if (key == "delimiter") {
    c.ingest.delimiter = to_delimiter(value);
  } else if (key == "columns") {
    apply_columns(c.ingest, value);
  } else if (key == "header") {
    c.ingest.has_header = to_bool(key, value);
  } else if (key == "rating_threshold") {
    if (value == "none")
      c.ingest.rating_threshold.reset();
    else
      c.ingest.rating_threshold = to_double(key, value);
  } else if (key == "rebase_time") {
    c.ingest.rebase_time = to_bool(key, value);
  } else if (key == "methods") {
    c.methods.clear();
    for (const auto& m : split_list(value)) c.methods.push_back(parse_method(m));
  } else if (key == "tau") {
    c.tau_grid.clear();
    for (const auto& t : split_list(value)) c.tau_grid.push_back(parse_duration(t, c.ingest.time_unit));
  } else if (key == "lambda") {
    c.lambda_grid.clear();
    for (const auto& v : split_list(value)) c.lambda_grid.push_back(to_double(key, v));
  } else if (key == "theta") {
    c.theta_grid.clear();
    for (const auto& v : split_list(value)) c.theta_grid.push_back(to_double(key, v));
  } else if (key == "epsilon") {
    c.epsilon = to_double(key, value);
  } else if (key == "list_length") {
    c.list_length = static_cast<std::size_t>(to_unsigned(key, value));
  } else if (key == "delta_p") {
    c.probe_span = parse_duration(value, c.ingest.time_unit);
  } else if (key == "calibration_range") {
    const auto [lo, hi] = parse_range(key, value);
    if (!hi) throw ConfigError("calibration_range needs an explicit upper bound");
    c.calibration_lo = lo;
    c.calibration_hi = *hi;
  } else if (key == "evaluation_range") {
    const auto [lo, hi] = parse_range(key, value);
    c.evaluation_lo = lo;
    c.evaluation_hi = hi;
  } else if (key == "probes") {
    c.probes = static_cast<std::size_t>(to_unsigned(key, value));
  } else if (key == "random_fraction") {
    c.random_fraction = to_double(key, value);
  } else if (key == "random_probe_baseline") {
    c.random_probe_baseline = to_bool(key, value);
  } else if (key == "seed") {
    c.seed = to_unsigned(key, value);
  } else if (key == "include_untrained_users") {
    c.include_untrained_users = to_bool(key, value);
  } else if (key == "drop_cold") {
    c.drop_cold = to_bool(key, value);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

ExperimentConfig parse_experiment_config(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto content = trim(line);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    auto key = trim(std::string_view(content).substr(0, eq));
    auto value = trim(std::string_view(content).substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (!seen.insert(key).second) throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    entries.emplace_back(std::move(key), std::move(value));
  }

  ExperimentConfig c;
  // Durations depend on the time unit, so read it first.
  for (const auto& [key, value] : entries)
    if (key == "time_unit") apply_setting(c, key, value);
  for (const auto& [key, value] : entries)
    if (key != "time_unit") apply_setting(c, key, value);
  if (c.ingest.rating_threshold && !c.ingest.rating_column)
    throw ConfigError("rating_threshold needs a rating column in 'columns'");
  validate(c);
  return c;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  return parse_experiment_config(in);
}

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["events"] = c.events_path;
  j["delimiter"] = delimiter_name(c.ingest.delimiter);
  j["columns"] = columns_text(c.ingest);
  j["header"] = c.ingest.has_header;
  j["rating_threshold"] = c.ingest.rating_threshold ? nlohmann::json(*c.ingest.rating_threshold) : nlohmann::json("none");
  j["time_unit"] = c.ingest.time_unit;
  j["rebase_time"] = c.ingest.rebase_time;
  auto& methods = j["methods"] = nlohmann::json::array();
  for (const auto m : c.methods) methods.push_back(to_string(m));
  j["tau"] = c.tau_grid;
  j["lambda"] = c.lambda_grid;
  j["theta"] = c.theta_grid;
  j["epsilon"] = c.epsilon;
  j["list_length"] = c.list_length;
  j["delta_p"] = c.probe_span;
  j["calibration_range"] = {c.calibration_lo, c.calibration_hi};
  j["evaluation_range"] = {c.evaluation_lo, c.evaluation_hi ? nlohmann::json(*c.evaluation_hi) : nlohmann::json("auto")};
  j["probes"] = c.probes;
  j["random_fraction"] = c.random_fraction;
  j["random_probe_baseline"] = c.random_probe_baseline;
  j["seed"] = c.seed;
  j["include_untrained_users"] = c.include_untrained_users;
  j["drop_cold"] = c.drop_cold;
  return j;
}

std::vector<MethodSpec> expand_grid(const ExperimentConfig& config, Method method) {
  std::vector<MethodSpec> points;
  MethodSpec base;
  base.method = method;
  base.params.epsilon = config.epsilon;
  const std::vector<Timestamp> taus = is_temporal(method) ? config.tau_grid : std::vector<Timestamp>{1};
  const std::vector<double> lambdas = uses_lambda(method) ? config.lambda_grid : std::vector<double>{0.0};
  const std::vector<double> thetas = uses_theta(method) ? config.theta_grid : std::vector<double>{1.0};
  for (const auto tau : taus)
    for (const double theta : thetas)
      for (const double lambda : lambdas) {
        MethodSpec spec = base;
        spec.params.tau = tau;
        spec.params.theta = theta;
        spec.params.lambda = lambda;
        points.push_back(spec);
      }
  return points;
}

Stat summarize_values(std::span<const double> values) {
  Stat s;
  if (values.empty()) return s;
  double sum = 0.0;
  for (const double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (const double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return s;
}

std::map<Method, MethodSpec> select_optimum(std::span<const PointSummary> points) {
  std::map<Method, const PointSummary*> best;
  const auto better = [](const PointSummary& a, const PointSummary& b) {
    if (a.recall.mean != b.recall.mean) return a.recall.mean > b.recall.mean;
    if (a.spec.params.tau != b.spec.params.tau) return a.spec.params.tau < b.spec.params.tau;
    if (a.spec.params.lambda != b.spec.params.lambda) return a.spec.params.lambda < b.spec.params.lambda;
    return a.spec.params.theta < b.spec.params.theta;
  };
  for (const auto& p : points) {
    if (p.probes == 0) continue;
    auto& slot = best[p.spec.method];
    if (!slot || better(p, *slot)) slot = &p;
  }
  std::map<Method, MethodSpec> out;
  for (const auto& [method, point] : best) out.emplace(method, point->spec);
  return out;
}

SweepResult calibrate(const EventLog& log, const ExperimentConfig& config) {
  validate(config);
  std::vector<MethodSpec> points;
  for (const auto m : config.methods) {
    const auto grid = expand_grid(config, m);
    points.insert(points.end(), grid.begin(), grid.end());
  }

  ProbeSampler sampler;
  sampler.lo = config.calibration_lo;
  sampler.hi = config.calibration_hi;
  sampler.count = config.probes;
  sampler.seed = child_seed(config.seed, kCalibrationStream, 0);
  // Calibration probe windows must close before evaluation T_P values start.
  sampler.max_time = evaluation_start(log, config) - config.probe_span;
  const auto times = sample_probe_times(log, sampler, config.probe_span);

  SweepResult sweep;
  std::vector<std::vector<MetricsReport>> per_point(points.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const auto split = time_probe(log, times[i], config.probe_span);
    if (run_probe(split, config, points, "calibration", i, sampler.seed, per_point, sweep.records))
      ++sweep.probes_used;
    else
      ++sweep.probes_skipped;
  }
  if (sweep.probes_used == 0) throw ExperimentError("every calibration probe was empty");

  for (std::size_t m = 0; m < points.size(); ++m) sweep.points.push_back(summarize_point(points[m], per_point[m]));
  sweep.optimum = select_optimum(sweep.points);
  return sweep;
}

std::vector<MethodSpec> chosen_points(const ExperimentConfig& config, const SweepResult& sweep) {
  std::vector<MethodSpec> chosen;
  for (const auto m : config.methods)
    if (const auto it = sweep.optimum.find(m); it != sweep.optimum.end()) chosen.push_back(it->second);
  return chosen;
}

EvaluationReport evaluate(const EventLog& log, const ExperimentConfig& config, std::span<const MethodSpec> chosen) {
  validate(config);
  if (chosen.empty()) throw ConfigError("no method points to evaluate");

  ProbeSampler sampler;
  sampler.lo = config.evaluation_lo;
  sampler.hi = config.evaluation_hi.value_or(1.0);
  sampler.count = config.probes;
  sampler.seed = child_seed(config.seed, kEvaluationStream, 0);
  const auto times = sample_probe_times(log, sampler, config.probe_span);

  EvaluationReport report;
  std::vector<std::vector<MetricsReport>> per_point(chosen.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const auto split = time_probe(log, times[i], config.probe_span);
    if (run_probe(split, config, chosen, "evaluation", i, sampler.seed, per_point, report.records))
      ++report.probes_used;
    else
      ++report.probes_skipped;
  }
  if (report.probes_used == 0) throw ExperimentError("every evaluation probe was empty");
  for (std::size_t m = 0; m < chosen.size(); ++m)
    report.rows.push_back({"time", chosen[m], summarize_point(chosen[m], per_point[m])});

  if (config.random_probe_baseline) {
    MethodSpec probs;
    probs.method = Method::probs;
    probs.params.epsilon = config.epsilon;
    const std::span<const MethodSpec> one(&probs, 1);
    std::vector<std::vector<MetricsReport>> random_reports(1);
    for (std::size_t i = 0; i < config.probes; ++i) {
      const auto seed = child_seed(config.seed, kRandomStream, i);
      const auto split = random_probe(log, config.random_fraction, seed);
      run_probe(split, config, one, "evaluation", i, seed, random_reports, report.records);
    }
    if (!random_reports[0].empty()) report.rows.push_back({"random", probs, summarize_point(probs, random_reports[0])});
  }
  return report;
}

nlohmann::json to_json(const SweepResult& sweep) {
  nlohmann::json j;
  j["probes_used"] = sweep.probes_used;
  j["probes_skipped"] = sweep.probes_skipped;
  j["skip_rate"] = static_cast<double>(sweep.probes_skipped) /
                   static_cast<double>(std::max<std::size_t>(1, sweep.probes_used + sweep.probes_skipped));
  auto& points = j["points"] = nlohmann::json::array();
  for (const auto& p : sweep.points) points.push_back(summary_json(p));
  auto& optimum = j["optimum"] = nlohmann::json::object();
  for (const auto& [method, spec] : sweep.optimum)
    optimum[to_string(method)] = {{"label", spec.label()}, {"params", params_json(spec)}};
  return j;
}

nlohmann::json to_json(const EvaluationReport& report) {
  nlohmann::json j;
  j["probes_used"] = report.probes_used;
  j["probes_skipped"] = report.probes_skipped;
  j["skip_rate"] = static_cast<double>(report.probes_skipped) /
                   static_cast<double>(std::max<std::size_t>(1, report.probes_used + report.probes_skipped));
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const auto& r : report.rows) {
    auto row = summary_json(r.summary);
    row["probe"] = r.probe;
    rows.push_back(std::move(row));
  }
  return j;
}

void write_records_csv(std::ostream& out, std::span<const ProbeRecord> records) {
  out << "phase,probe,probe_index,seed,T_P,Delta_P,method,tau,lambda,theta,recall,ranking_score,k_R,users,"
         "probe_entries,cold_fraction\n";
  for (const auto& r : records) {
    out << r.phase << ',' << to_string(r.kind) << ',' << r.probe_index << ',' << r.seed << ',';
    if (r.kind == ProbeKind::time) out << r.probe_time << ',' << r.probe_span;
    else out << ',';
    out << ',';
    write_param_columns(out, r.spec);
    out << ',' << format_number(r.report.recall) << ',' << format_number(r.report.ranking_score) << ','
        << format_number(r.report.mean_top_degree) << ',' << r.report.users << ',' << r.report.probe_entries << ','
        << format_number(r.report.cold_fraction) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "method,tau,lambda,theta,probes,recall,recall_std,ranking_score,ranking_score_std,k_R,k_R_std,optimal\n";
  for (const auto& p : sweep.points) {
    write_param_columns(out, p.spec);
    const auto it = sweep.optimum.find(p.spec.method);
    const bool optimal = it != sweep.optimum.end() && it->second.label() == p.spec.label();
    out << ',' << p.probes << ',' << format_number(p.recall.mean) << ',' << format_number(p.recall.stddev) << ','
        << format_number(p.ranking_score.mean) << ',' << format_number(p.ranking_score.stddev) << ','
        << format_number(p.mean_top_degree.mean) << ',' << format_number(p.mean_top_degree.stddev) << ','
        << (optimal ? 1 : 0) << '\n';
  }
}

void write_report_csv(std::ostream& out, const EvaluationReport& report) {
  out << "probe,method,tau,lambda,theta,probes,recall,recall_std,ranking_score,ranking_score_std,k_R,k_R_std\n";
  for (const auto& r : report.rows) {
    const auto& s = r.summary;
    out << r.probe << ',';
    write_param_columns(out, r.spec);
    out << ',' << s.probes << ',' << format_number(s.recall.mean) << ',' << format_number(s.recall.stddev) << ','
        << format_number(s.ranking_score.mean) << ',' << format_number(s.ranking_score.stddev) << ','
        << format_number(s.mean_top_degree.mean) << ',' << format_number(s.mean_top_degree.stddev) << '\n';
  }
}

}  // namespace timeprobe
