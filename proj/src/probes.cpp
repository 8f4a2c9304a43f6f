#include "timeprobe/probes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "timeprobe/error.hpp"
#include "timeprobe/rng.hpp"

namespace timeprobe {
namespace {

constexpr std::uint64_t kRandomProbeStream = 0x72616e64;  // "rand"
constexpr std::uint64_t kProbeTimeStream = 0x74696d65;    // "time"

std::size_t count_cold(const Snapshot& training, std::span<const Event> probe) {
  return static_cast<std::size_t>(
      std::count_if(probe.begin(), probe.end(), [&](const Event& e) { return training.item_degree(e.item) == 0; }));
}

}  // namespace

const char* to_string(ProbeKind kind) noexcept { return kind == ProbeKind::random ? "random" : "time"; }

ProbeSplit random_probe(const EventLog& log, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) throw ConfigError("random probe fraction must lie in (0, 1)");

  const auto events = log.events();
  const std::size_t total = events.size();
  const auto probe_size = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(total)));

  // Partial Fisher-Yates: the first probe_size slots are a uniform sample
  // without replacement.
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(child_seed(seed, kRandomProbeStream, 0));
  for (std::size_t i = 0; i < probe_size; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.uniform_index(total - i));
    std::swap(order[i], order[j]);
  }

  std::vector<char> in_probe(total, 0);
  for (std::size_t i = 0; i < probe_size; ++i) in_probe[order[i]] = 1;

  ProbeSplit split;
  split.kind = ProbeKind::random;
  split.fraction = fraction;
  split.seed = seed;
  std::vector<Event> training;
  training.reserve(total - probe_size);
  split.probe.reserve(probe_size);
  for (std::size_t i = 0; i < total; ++i) (in_probe[i] ? split.probe : training).push_back(events[i]);

  split.training = Snapshot::from_events(training, log.user_count(), log.item_count(), log.max_time() + 1);
  split.cold_event_count = count_cold(split.training, split.probe);
  split.status = split.probe.empty() ? ProbeStatus::empty_probe : ProbeStatus::ok;
  return split;
}

ProbeSplit time_probe(const EventLog& log, Timestamp tp, Timestamp span) {
  if (span <= 0) throw ConfigError("probe span must be positive");
  if (tp <= 0 || tp > log.max_time()) throw ConfigError("probe time must lie in (0, T_m]");

  const auto begin = log.prefix_length(tp);
  const auto end = log.prefix_length(tp + span);
  const auto events = log.events();

  ProbeSplit split;
  split.kind = ProbeKind::time;
  split.probe_time = tp;
  split.probe_span = span;
  split.training = build_snapshot(log, tp);
  split.probe.assign(events.begin() + static_cast<std::ptrdiff_t>(begin), events.begin() + static_cast<std::ptrdiff_t>(end));
  split.discarded_count = events.size() - end;
  split.cold_event_count = count_cold(split.training, split.probe);
  split.status = split.probe.empty() ? ProbeStatus::empty_probe : ProbeStatus::ok;
  return split;
}

ProbeSplit drop_cold_items(ProbeSplit split) {
  std::erase_if(split.probe, [&](const Event& e) { return split.training.item_degree(e.item) == 0; });
  split.cold_event_count = 0;
  if (split.probe.empty()) split.status = ProbeStatus::empty_probe;
  return split;
}

std::pair<Timestamp, Timestamp> probe_time_range(const EventLog& log, const ProbeSampler& sampler, Timestamp span) {
  if (!(sampler.lo >= 0.0 && sampler.lo <= sampler.hi)) throw ConfigError("probe sampler needs 0 <= lo <= hi");
  if (span <= 0) throw ConfigError("probe span must be positive");
  const auto tm = static_cast<double>(log.max_time());
  // The small slack absorbs representation error such as 0.9 * 100.
  auto lower = static_cast<Timestamp>(std::ceil(sampler.lo * tm - 1e-9));
  auto upper = static_cast<Timestamp>(std::floor(sampler.hi * tm + 1e-9));
  lower = std::max<Timestamp>(lower, 1);
  upper = std::min(upper, log.max_time() - span);
  if (sampler.max_time) upper = std::min(upper, *sampler.max_time);
  if (upper < lower)
    throw ConfigError("empty probe-time range [" + std::to_string(lower) + ", " + std::to_string(upper) + "]");
  return {lower, upper};
}

std::vector<Timestamp> sample_probe_times(const EventLog& log, const ProbeSampler& sampler, Timestamp span) {
  if (sampler.count < 1) throw ConfigError("probe sampler count must be at least 1");
  const auto [lower, upper] = probe_time_range(log, sampler, span);
  const auto width = static_cast<std::uint64_t>(upper - lower) + 1;
  std::vector<Timestamp> times;
  times.reserve(sampler.count);
  for (std::size_t i = 0; i < sampler.count; ++i) {
    Rng rng(child_seed(sampler.seed, kProbeTimeStream, i));
    times.push_back(lower + static_cast<Timestamp>(rng.uniform_index(width)));
  }
  return times;
}

nlohmann::json describe(const ProbeSplit& split) {
  nlohmann::json j;
  j["kind"] = to_string(split.kind);
  j["status"] = split.status == ProbeStatus::ok ? "ok" : "empty_probe";
  if (split.kind == ProbeKind::random) {
    j["fraction"] = split.fraction;
    j["seed"] = split.seed;
  } else {
    j["T_P"] = split.probe_time;
    j["Delta_P"] = split.probe_span;
    j["discarded_events"] = split.discarded_count;
  }
  j["training_events"] = split.training.edge_count();
  j["training_users"] = split.training.active_user_count();
  j["training_items"] = split.training.active_item_count();
  j["probe_events"] = split.probe.size();
  j["cold_probe_events"] = split.cold_event_count;
  j["cold_item_fraction"] = split.cold_fraction();
  return j;
}

}  // namespace timeprobe
