// timeprobe: command-line front end.
//
// Every subcommand writes its outputs plus <command>.provenance.json into
// --out-dir. Exit codes: 0 ok, 2 usage, 3 parse, 4 empty input, 5 config,
// 6 undefined metric, 7 experiment, 8 io, 1 anything else.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "timeprobe/diagnostics.hpp"
#include "timeprobe/duration.hpp"
#include "timeprobe/error.hpp"
#include "timeprobe/evaluation.hpp"
#include "timeprobe/event_log.hpp"
#include "timeprobe/experiment.hpp"
#include "timeprobe/format.hpp"
#include "timeprobe/probes.hpp"
#include "timeprobe/ranking.hpp"
#include "timeprobe/recommenders.hpp"
#include "timeprobe/synthgen.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace timeprobe;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kUsageExit = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code(Error::Category c) {
  switch (c) {
    case Error::Category::parse:
      return 3;
    case Error::Category::empty_input:
      return 4;
    case Error::Category::config:
      return 5;
    case Error::Category::undefined_metric:
      return 6;
    case Error::Category::experiment:
      return 7;
    case Error::Category::io:
      return 8;
  }
  return 1;
}

struct Global {
  std::optional<std::uint64_t> seed;
  std::string config_path;
  std::string out_dir = ".";
  std::string format = "csv";
  int threads = 0;
  std::vector<std::string> arguments;
};

/// Config keys set from the command line, in the order given.
using Settings = std::vector<std::pair<std::string, std::string>>;

void setting_option(CLI::App* app, const std::string& flag, const std::string& key, Settings& settings,
                    const std::string& help) {
  app->add_option_function<std::string>(
      flag, [&settings, key](const std::string& v) { settings.emplace_back(key, v); }, help);
}

void setting_flag(CLI::App* app, const std::string& flag, const std::string& key, Settings& settings,
                  const std::string& help) {
  app->add_flag_function(
      flag, [&settings, key](std::int64_t) { settings.emplace_back(key, "true"); }, help);
}

void add_input_options(CLI::App* app, Settings& settings) {
  app->add_option_function<std::string>(
         "--events", [&settings](const std::string& v) { settings.emplace_back("events", v); },
         "Event file (user, item, timestamp per line)")
      ->check(CLI::ExistingFile);
  setting_option(app, "--delimiter", "delimiter", settings, "tab, comma, space, semicolon or one character");
  setting_option(app, "--columns", "columns", settings, "Column roles, e.g. user,item,rating,time");
  setting_flag(app, "--header", "header", settings, "Skip the first line");
  setting_option(app, "--rating-threshold", "rating_threshold", settings, "Keep events with rating >= value");
  setting_option(app, "--time-unit", "time_unit", settings, "Native time unit of the timestamps");
  setting_flag(app, "--rebase-time", "rebase_time", settings, "Shift timestamps so the first is 0");
}

void add_set_option(CLI::App* app, Settings& settings) {
  app->add_option_function<std::vector<std::string>>(
      "--set",
      [&settings](const std::vector<std::string>& items) {
        for (const auto& item : items) {
          const auto eq = item.find('=');
          if (eq == std::string::npos) throw CLI::ValidationError("--set", "expected key=value, got '" + item + "'");
          settings.emplace_back(item.substr(0, eq), item.substr(eq + 1));
        }
      },
      "Override any config key (key=value, repeatable)");
}

ExperimentConfig resolve_config(const Global& g, const Settings& settings) {
  ExperimentConfig config = g.config_path.empty() ? ExperimentConfig{} : load_experiment_config(g.config_path);
  for (const auto& [key, value] : settings)
    if (key == "time_unit") apply_setting(config, key, value);
  for (const auto& [key, value] : settings)
    if (key != "time_unit") apply_setting(config, key, value);
  if (g.seed) config.seed = *g.seed;
  if (config.ingest.rating_threshold && !config.ingest.rating_column)
    throw ConfigError("rating_threshold needs a rating column in 'columns'");
  validate(config);
  return config;
}

EventLog load_input(const ExperimentConfig& config) {
  if (config.events_path.empty()) throw UsageError("no event file given (use --events or 'events' in --config)");
  if (!fs::is_regular_file(config.events_path)) throw UsageError("event file not found: " + config.events_path);
  return load_events(config.events_path, config.ingest);
}

json log_summary(const EventLog& log, const std::string& path) {
  return {{"path", path},
          {"events", log.event_count()},
          {"users", log.user_count()},
          {"items", log.item_count()},
          {"min_time", log.min_time()},
          {"max_time", log.max_time()},
          {"time_unit", log.time_unit()}};
}

class Run {
 public:
  Run(const Global& g, std::string command) : global_(g), command_(std::move(command)) {
    std::error_code ec;
    fs::create_directories(g.out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + g.out_dir + "': " + ec.message());
    provenance_["tool"] = "timeprobe";
    provenance_["version"] = kVersion;
    provenance_["command"] = command_;
    provenance_["arguments"] = g.arguments;
    provenance_["threads"] = g.threads;
    provenance_["outputs"] = json::array();
  }

  fs::path path(const std::string& name) const { return fs::path(global_.out_dir) / name; }
  bool want_json() const { return global_.format == "json"; }
  json& provenance() { return provenance_; }

  std::ofstream open(const fs::path& p) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError("cannot write '" + p.string() + "'");
    provenance_["outputs"].push_back(p.lexically_normal().generic_string());
    return out;
  }

  void write_json(const fs::path& p, const json& j) {
    auto out = open(p);
    out << j.dump(2) << '\n';
  }

  void finish() { write_json(path(command_ + ".provenance.json"), provenance_); }

 private:
  const Global& global_;
  std::string command_;
  json provenance_;
};

/// Training links of a snapshot as events, ordered by (time, user, item).
std::vector<Event> snapshot_events(const Snapshot& s) {
  std::vector<Event> events;
  events.reserve(s.edge_count());
  for (ItemIndex i = 0; i < s.item_space(); ++i) {
    const auto users = s.users_of(i);
    const auto times = s.item_times(i);
    for (std::size_t k = 0; k < users.size(); ++k) events.push_back({users[k], i, times[k]});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.time != b.time) return a.time < b.time;
    if (a.user != b.user) return a.user < b.user;
    return a.item < b.item;
  });
  return events;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

/// T_P from --tp-time (absolute) or --tp (fraction of the last timestamp).
Timestamp resolve_probe_time(const EventLog& log, std::optional<double> fraction, std::optional<Timestamp> absolute,
                             double default_fraction) {
  if (absolute) return *absolute;
  const double f = fraction.value_or(default_fraction);
  if (!(f > 0.0 && f <= 1.0)) throw ConfigError("--tp must lie in (0, 1]");
  return std::max<Timestamp>(1, static_cast<Timestamp>(std::floor(f * static_cast<double>(log.max_time()) + 1e-9)));
}

// ---------------------------------------------------------------- ingest

struct IngestArgs {
  Settings settings;
  std::string input;
  std::string out;
};

void cmd_ingest(const Global& g, IngestArgs& a) {
  a.settings.emplace_back("events", a.input);
  const auto config = resolve_config(g, a.settings);
  Run run(g, "ingest");
  const auto log = load_input(config);
  const fs::path out_path = a.out.empty() ? run.path("events.tsv") : fs::path(a.out);
  auto out = run.open(out_path);
  write_events(out, log);
  run.provenance()["ingest"] = to_json(config);
  run.provenance()["input"] = log_summary(log, config.events_path);
  run.finish();
  std::cerr << "ingested " << log.event_count() << " events (" << log.user_count() << " users, " << log.item_count()
            << " items) -> " << out_path.string() << '\n';
}

// ---------------------------------------------------------------- synth

struct SynthArgs {
  GenParams params;
  std::string decay_mean;
  std::string params_path;
  std::string out;
};

void cmd_synth(const Global& g, SynthArgs& a, const CLI::App* sub) {
  GenParams p = a.params;
  if (!a.params_path.empty()) {
    std::ifstream in(a.params_path);
    if (!in) throw IoError("cannot open '" + a.params_path + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ConfigError(std::string("invalid generator parameter file: ") + e.what());
    }
    const GenParams from_file = gen_params_from_json(j);
    // Explicit flags win over the file.
    const auto keep = [&](const char* flag, auto& field, const auto& file_value) {
      if (sub->count(flag) == 0) field = file_value;
    };
    keep("--users", p.n_users, from_file.n_users);
    keep("--items-initial", p.n_items_initial, from_file.n_items_initial);
    keep("--arrival-rate", p.item_arrival_rate, from_file.item_arrival_rate);
    keep("--events-per-step", p.events_per_step, from_file.events_per_step);
    keep("--decay-spread", p.decay_spread, from_file.decay_spread);
    keep("--attractiveness", p.attractiveness, from_file.attractiveness);
    keep("--steps", p.total_steps, from_file.total_steps);
    keep("--max-retries", p.max_retries, from_file.max_retries);
    if (sub->count("--decay-mean") == 0) p.decay_mean = from_file.decay_mean;
    if (!g.seed) p.seed = from_file.seed;
  }
  if (!a.decay_mean.empty()) {
    if (a.decay_mean == "inf" || a.decay_mean == "none") {
      p.decay_mean = std::numeric_limits<double>::infinity();
    } else {
      try {
        std::size_t used = 0;
        p.decay_mean = std::stod(a.decay_mean, &used);
        if (used != a.decay_mean.size()) throw std::invalid_argument(a.decay_mean);
      } catch (const std::exception&) {
        throw ConfigError("--decay-mean: invalid value '" + a.decay_mean + "'");
      }
    }
  }
  if (g.seed) p.seed = *g.seed;

  Run run(g, "synth");
  const auto log = generate(p);
  const fs::path out_path = a.out.empty() ? run.path("events.tsv") : fs::path(a.out);
  auto out = run.open(out_path);
  write_events(out, log);
  run.provenance()["seed"] = p.seed;
  run.provenance()["generator"] = to_json(p);
  run.provenance()["output_log"] = log_summary(log, out_path.generic_string());
  run.finish();
  std::cerr << "generated " << log.event_count() << " events -> " << out_path.string() << '\n';
}

// ---------------------------------------------------------------- split

struct SplitArgs {
  Settings settings;
  std::string kind;
  std::optional<double> tp;
  std::optional<Timestamp> tp_time;
  std::string delta_p;
  std::optional<double> fraction;
  bool drop_cold = false;
};

void cmd_split(const Global& g, SplitArgs& a) {
  if (!a.delta_p.empty()) a.settings.emplace_back("delta_p", a.delta_p);
  if (a.fraction) a.settings.emplace_back("random_fraction", format_number(*a.fraction));
  auto config = resolve_config(g, a.settings);
  if (a.drop_cold) config.drop_cold = true;
  const auto log = load_input(config);
  Run run(g, "split");

  ProbeSplit split;
  if (a.kind == "random") {
    split = random_probe(log, config.random_fraction, config.seed);
  } else {
    const auto tp = resolve_probe_time(log, a.tp, a.tp_time, config.evaluation_lo);
    split = time_probe(log, tp, config.probe_span);
  }
  if (config.drop_cold) split = drop_cold_items(split);

  {
    auto out = run.open(run.path("training.tsv"));
    const auto events = snapshot_events(split.training);
    write_events(out, log, events);
  }
  {
    auto out = run.open(run.path("probe.tsv"));
    write_events(out, log, split.probe);
  }
  auto sidecar = describe(split);
  sidecar["time_unit"] = log.time_unit();
  run.write_json(run.path("split.json"), sidecar);
  run.provenance()["seed"] = config.seed;
  run.provenance()["config"] = to_json(config);
  run.provenance()["input"] = log_summary(log, config.events_path);
  run.provenance()["split"] = sidecar;
  run.finish();
  if (split.status == ProbeStatus::empty_probe) std::cerr << "warning: the probe window holds no events\n";
}

// ---------------------------------------------------------------- recommend

struct RecommendArgs {
  Settings settings;
  std::string method;
  std::string tau;
  std::optional<double> lambda;
  std::optional<double> theta;
  std::optional<double> epsilon;
  std::optional<double> tp;
  std::optional<Timestamp> tp_time;
  std::vector<std::string> users;
  std::size_t list_length = 0;
};

void cmd_recommend(const Global& g, RecommendArgs& a) {
  if (a.epsilon) a.settings.emplace_back("epsilon", format_number(*a.epsilon));
  const auto config = resolve_config(g, a.settings);
  const auto log = load_input(config);

  MethodSpec spec;
  spec.method = parse_method(a.method);
  spec.params.epsilon = config.epsilon;
  spec.params.tau = a.tau.empty() ? config.tau_grid.front() : parse_duration(a.tau, log.time_unit());
  if (a.lambda) spec.params.lambda = *a.lambda;
  if (a.theta) spec.params.theta = *a.theta;
  const std::size_t L = a.list_length ? a.list_length : config.list_length;

  // Default: recommend from the whole log.
  const Timestamp cut = (a.tp || a.tp_time) ? resolve_probe_time(log, a.tp, a.tp_time, 1.0) : log.max_time() + 1;
  const auto snapshot = build_snapshot(log, cut);
  validate(spec, snapshot);
  const Scorer scorer(snapshot, spec, cut);

  std::vector<UserIndex> users;
  if (a.users.empty()) {
    for (UserIndex u = 0; u < snapshot.user_space(); ++u)
      if (snapshot.user_degree(u) > 0) users.push_back(u);
  } else {
    for (const auto& id : a.users) {
      const auto u = log.find_user(id);
      if (!u) throw ConfigError("unknown user '" + id + "'");
      users.push_back(*u);
    }
  }

  std::vector<RecommendationList> lists(users.size());
#pragma omp parallel
  {
    DiffusionWorkspace ws(snapshot.user_space());
    std::vector<double> scores(snapshot.item_space());
#pragma omp for schedule(dynamic, 16)
    for (std::size_t n = 0; n < users.size(); ++n) {
      scorer.score(users[n], ws, scores);
      lists[n] = rank_items(scores, snapshot, users[n], L);
    }
  }

  Run run(g, "recommend");
  if (run.want_json()) {
    json rows = json::array();
    for (const auto& list : lists)
      for (std::size_t r = 0; r < list.items.size(); ++r)
        rows.push_back({{"user_id", log.user_id(list.user)},
                        {"rank", r + 1},
                        {"item_id", log.item_id(list.items[r])},
                        {"score", list.scores[r]}});
    run.write_json(run.path("recommendations.json"), rows);
  } else {
    auto out = run.open(run.path("recommendations.csv"));
    out << "user_id,rank,item_id,score\n";
    for (const auto& list : lists)
      for (std::size_t r = 0; r < list.items.size(); ++r)
        out << csv_field(log.user_id(list.user)) << ',' << r + 1 << ',' << csv_field(log.item_id(list.items[r])) << ','
            << format_number(list.scores[r]) << '\n';
  }
  run.provenance()["config"] = to_json(config);
  run.provenance()["input"] = log_summary(log, config.events_path);
  run.provenance()["method"] = {{"label", spec.label()}, {"params", params_json(spec)}};
  run.provenance()["cut_time"] = cut;
  run.provenance()["list_length"] = L;
  run.finish();
}

// ---------------------------------------------------------------- calibrate / evaluate

struct ExperimentArgs {
  Settings settings;
};

void write_sweep(Run& run, const SweepResult& sweep) {
  if (run.want_json()) {
    run.write_json(run.path("sweep.json"), to_json(sweep));
  } else {
    auto out = run.open(run.path("sweep.csv"));
    write_sweep_csv(out, sweep);
  }
  auto records = run.open(run.path("calibration_records.csv"));
  write_records_csv(records, sweep.records);
}

void cmd_calibrate(const Global& g, ExperimentArgs& a) {
  const auto config = resolve_config(g, a.settings);
  const auto log = load_input(config);
  Run run(g, "calibrate");
  const auto sweep = calibrate(log, config);
  write_sweep(run, sweep);
  run.provenance()["seed"] = config.seed;
  run.provenance()["config"] = to_json(config);
  run.provenance()["input"] = log_summary(log, config.events_path);
  run.provenance()["probes_used"] = sweep.probes_used;
  run.provenance()["probes_skipped"] = sweep.probes_skipped;
  run.finish();
  for (const auto& [method, spec] : sweep.optimum) std::cerr << "optimum " << spec.label() << '\n';
}

void cmd_evaluate(const Global& g, ExperimentArgs& a) {
  const auto config = resolve_config(g, a.settings);
  const auto log = load_input(config);
  Run run(g, "evaluate");
  const auto sweep = calibrate(log, config);
  const auto chosen = chosen_points(config, sweep);
  const auto report = evaluate(log, config, chosen);
  write_sweep(run, sweep);
  if (run.want_json()) {
    run.write_json(run.path("report.json"), to_json(report));
  } else {
    auto out = run.open(run.path("report.csv"));
    write_report_csv(out, report);
  }
  auto records = run.open(run.path("evaluation_records.csv"));
  write_records_csv(records, report.records);
  run.provenance()["seed"] = config.seed;
  run.provenance()["config"] = to_json(config);
  run.provenance()["input"] = log_summary(log, config.events_path);
  run.provenance()["calibration"] = {{"probes_used", sweep.probes_used}, {"probes_skipped", sweep.probes_skipped}};
  run.provenance()["evaluation"] = {{"probes_used", report.probes_used}, {"probes_skipped", report.probes_skipped}};
  run.finish();
  write_report_csv(std::cout, report);
}

// ---------------------------------------------------------------- diagnose

struct DiagnoseArgs {
  Settings settings;
  std::optional<double> tp;
  std::optional<Timestamp> tp_time;
  std::string delta_p;
  std::string tau;
  std::size_t min_degree = 2;
};

void cmd_diagnose(const Global& g, DiagnoseArgs& a) {
  if (!a.delta_p.empty()) a.settings.emplace_back("delta_p", a.delta_p);
  const auto config = resolve_config(g, a.settings);
  const auto log = load_input(config);
  const Timestamp tau = a.tau.empty() ? config.tau_grid.front() : parse_duration(a.tau, log.time_unit());
  const auto tp = resolve_probe_time(log, a.tp, a.tp_time, config.evaluation_lo);
  const auto split = time_probe(log, tp, config.probe_span);
  if (split.status == ProbeStatus::empty_probe) throw UndefinedMetricError("the probe window holds no events");

  Run run(g, "diagnose");
  const auto rows = item_degree_rows(split, tau);
  {
    auto out = run.open(run.path("scatter.csv"));
    write_scatter_csv(out, log, rows);
  }
  const auto corr = probe_degree_correlations(split, tau);
  const auto half = popularity_half_life(log, a.min_degree);
  json summary;
  summary["probe"] = describe(split);
  summary["tau"] = tau;
  summary["items"] = corr.items;
  summary["corr_k_train_k_P"] = corr.training_vs_probe;
  summary["corr_dk_k_P"] = corr.increase_vs_probe;
  summary["half_life"] = {{"mean", half.mean}, {"median", half.median}, {"items", half.items}, {"min_degree", a.min_degree}};
  run.write_json(run.path("diagnostics.json"), summary);
  run.provenance()["config"] = to_json(config);
  run.provenance()["input"] = log_summary(log, config.events_path);
  run.finish();
  std::cout << "corr(k, k_P) = " << format_number(corr.training_vs_probe)
            << "\ncorr(dk, k_P) = " << format_number(corr.increase_vs_probe) << '\n';
}

void add_probe_time_options(CLI::App* app, std::optional<double>& tp, std::optional<Timestamp>& tp_time) {
  auto* frac = app->add_option("--tp", tp, "Probe start as a fraction of the last timestamp");
  auto* abs = app->add_option("--tp-time", tp_time, "Probe start as an absolute timestamp");
  frac->excludes(abs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal evaluation of diffusion recommenders on user-item event logs", "timeprobe"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Global g;
  for (int i = 1; i < argc; ++i) g.arguments.emplace_back(argv[i]);
  app.add_option("--seed", g.seed, "Master seed");
  app.add_option("--config", g.config_path, "Experiment config file (key = value)")->check(CLI::ExistingFile);
  app.add_option("--out-dir", g.out_dir, "Directory for outputs and provenance")->capture_default_str();
  app.add_option("--format", g.format, "Table output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--threads", g.threads, "Worker thread cap (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.fallthrough();

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Normalize a raw event file");
  ingest_cmd->add_option("--input", ingest.input, "Raw event file")->required()->check(CLI::ExistingFile);
  add_input_options(ingest_cmd, ingest.settings);
  ingest_cmd->remove_option(ingest_cmd->get_option("--events"));
  ingest_cmd->add_option("--out", ingest.out, "Output path (default <out-dir>/events.tsv)");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic log with aging preferential attachment");
  synth_cmd->add_option("--users", synth.params.n_users, "Number of users")->capture_default_str();
  synth_cmd->add_option("--items-initial", synth.params.n_items_initial, "Items present at step 0")->capture_default_str();
  synth_cmd->add_option("--arrival-rate", synth.params.item_arrival_rate, "New items per step")->capture_default_str();
  synth_cmd->add_option("--events-per-step", synth.params.events_per_step, "Links per step")->capture_default_str();
  synth_cmd->add_option("--decay-mean", synth.decay_mean, "Mean relevance timescale in steps, or inf (default 10)");
  synth_cmd->add_option("--decay-spread", synth.params.decay_spread, "Log-space spread of timescales")
      ->capture_default_str();
  synth_cmd->add_option("--attractiveness", synth.params.attractiveness, "Initial attractiveness A")
      ->capture_default_str();
  synth_cmd->add_option("--steps", synth.params.total_steps, "Number of steps")->capture_default_str();
  synth_cmd->add_option("--max-retries", synth.params.max_retries, "Rejection attempts per link")->capture_default_str();
  synth_cmd->add_option("--params", synth.params_path, "Generator parameters as JSON")->check(CLI::ExistingFile);
  synth_cmd->add_option("--out", synth.out, "Output path (default <out-dir>/events.tsv)");

  SplitArgs split;
  auto* split_cmd = app.add_subcommand("split", "Split a log into training and probe sets");
  add_input_options(split_cmd, split.settings);
  split_cmd->add_option("--kind", split.kind, "time or random")->required()->check(CLI::IsMember({"time", "random"}));
  add_probe_time_options(split_cmd, split.tp, split.tp_time);
  split_cmd->add_option("--delta-p", split.delta_p, "Probe window length, e.g. 1d");
  split_cmd->add_option("--fraction", split.fraction, "Random probe fraction");
  split_cmd->add_flag("--drop-cold", split.drop_cold, "Remove probe links to items absent from training");

  RecommendArgs rec;
  auto* rec_cmd = app.add_subcommand("recommend", "Top-L recommendations per user");
  add_input_options(rec_cmd, rec.settings);
  rec_cmd->add_option("--method", rec.method, "probs, heats, hybrid, sims, di, tprobs or thybrid")->required();
  rec_cmd->add_option("--tau", rec.tau, "Recent window for temporal methods, e.g. 5d");
  rec_cmd->add_option("--lambda", rec.lambda, "Hybrid / SimS blend");
  rec_cmd->add_option("--theta", rec.theta, "SimS similarity exponent");
  rec_cmd->add_option("--epsilon", rec.epsilon, "Degree regularizer");
  add_probe_time_options(rec_cmd, rec.tp, rec.tp_time);
  rec_cmd->add_option("--user", rec.users, "User id (repeatable; default every user with links)");
  rec_cmd->add_option("-L,--list-length", rec.list_length, "List length (default from config, 50)");

  ExperimentArgs cal;
  auto* cal_cmd = app.add_subcommand("calibrate", "Sweep method parameters on calibration time probes");
  add_input_options(cal_cmd, cal.settings);
  add_set_option(cal_cmd, cal.settings);

  ExperimentArgs eval;
  auto* eval_cmd = app.add_subcommand("evaluate", "Calibrate, then evaluate the chosen points out of sample");
  add_input_options(eval_cmd, eval.settings);
  add_set_option(eval_cmd, eval.settings);

  DiagnoseArgs diag;
  auto* diag_cmd = app.add_subcommand("diagnose", "Degree correlations and popularity half-life");
  add_input_options(diag_cmd, diag.settings);
  add_probe_time_options(diag_cmd, diag.tp, diag.tp_time);
  diag_cmd->add_option("--delta-p", diag.delta_p, "Probe window length, e.g. 1d");
  diag_cmd->add_option("--tau", diag.tau, "Recent window for the degree increase");
  diag_cmd->add_option("--min-degree", diag.min_degree, "Half-life only over items with at least this degree")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  try {
    set_thread_count(g.threads);
    if (*ingest_cmd) cmd_ingest(g, ingest);
    if (*synth_cmd) cmd_synth(g, synth, synth_cmd);
    if (*split_cmd) cmd_split(g, split);
    if (*rec_cmd) cmd_recommend(g, rec);
    if (*cal_cmd) cmd_calibrate(g, cal);
    if (*eval_cmd) cmd_evaluate(g, eval);
    if (*diag_cmd) cmd_diagnose(g, diag);
  } catch (const UsageError& e) {
    std::cerr << "timeprobe: usage error: " << e.what() << '\n';
    return kUsageExit;
  } catch (const Error& e) {
    std::cerr << "timeprobe: " << category_name(e.category()) << ": " << e.what() << '\n';
    return exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "timeprobe: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
