#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "timeprobe/event_log.hpp"
#include "timeprobe/snapshot.hpp"

namespace timeprobe {

enum class ProbeKind { random, time };
enum class ProbeStatus { ok, empty_probe };

const char* to_string(ProbeKind kind) noexcept;

/// Training snapshot plus held-out probe events.
struct ProbeSplit {
  ProbeKind kind = ProbeKind::time;
  Snapshot training;
  std::vector<Event> probe;
  ProbeStatus status = ProbeStatus::ok;

  /// Random probe only.
  double fraction = 0.0;
  std::uint64_t seed = 0;

  /// Time probe only: probe window [probe_time, probe_time + probe_span).
  Timestamp probe_time = 0;
  Timestamp probe_span = 0;

  /// Events later than the probe window (time probe only).
  std::size_t discarded_count = 0;
  /// Probe events whose item has no training link.
  std::size_t cold_event_count = 0;

  double cold_fraction() const noexcept {
    return probe.empty() ? 0.0 : static_cast<double>(cold_event_count) / static_cast<double>(probe.size());
  }
  /// Time at which temporal features are evaluated: T_P for time probes, the
  /// snapshot cut time for random probes.
  Timestamp reference_time() const noexcept { return kind == ProbeKind::time ? probe_time : training.cut_time(); }
};

/// Moves round(fraction * E) uniformly chosen events to the probe. The
/// training snapshot keeps the rest with cut time T_m + 1.
ProbeSplit random_probe(const EventLog& log, double fraction, std::uint64_t seed);

/// Probe = events in [tp, tp + span); training = events before tp. An empty
/// probe is not an error: the split comes back with status empty_probe.
ProbeSplit time_probe(const EventLog& log, Timestamp tp, Timestamp span);

/// Removes probe events on items without training links. Mirrors evaluation
/// setups that silently shrink the probe; off by default.
ProbeSplit drop_cold_items(ProbeSplit split);

/// Uniform draws of T_P from the integer times in
/// [lo * T_m, min(hi * T_m, T_m - span, max_time)].
struct ProbeSampler {
  double lo = 0.9;
  double hi = 1.0;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  /// Optional extra upper bound on T_P (used to keep calibration probe
  /// windows clear of the evaluation range).
  std::optional<Timestamp> max_time;
};

/// Draw i uses child_seed(seed, stream, i), so any single draw can be
/// recomputed from its index. Throws ConfigError on an empty feasible range.
std::vector<Timestamp> sample_probe_times(const EventLog& log, const ProbeSampler& sampler, Timestamp span);

/// Feasible integer T_P range of a sampler, inclusive. Throws ConfigError if
/// empty.
std::pair<Timestamp, Timestamp> probe_time_range(const EventLog& log, const ProbeSampler& sampler, Timestamp span);

/// Provenance sidecar: kind, seed, T_P, Delta_P, counts, cold-item fraction.
nlohmann::json describe(const ProbeSplit& split);

}  // namespace timeprobe
