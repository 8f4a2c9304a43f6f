#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

#include "json.hpp"

#include "timeprobe/event_log.hpp"

namespace timeprobe {

/// Parameters of the growth model with relevance decay.
///
/// At each step new items arrive, then events_per_step links are drawn; each
/// link picks a uniform user and an item with probability proportional to
/// (k + A) * exp(-(t - birth) / timescale). Timescales are log-normal with
/// the given mean and log-space spread; an infinite mean disables aging.
struct GenParams {
  std::size_t n_users = 2000;
  std::size_t n_items_initial = 20;
  /// Items per step; fractional rates are spread evenly over steps.
  double item_arrival_rate = 2.0;
  std::size_t events_per_step = 100;
  double decay_mean = 10.0;
  double decay_spread = 0.5;
  double attractiveness = 1.0;
  std::size_t total_steps = 500;
  std::uint64_t seed = 1;
  /// Rejection attempts per event before giving up on a duplicate pair.
  std::size_t max_retries = 10000;

  bool aging() const noexcept { return decay_mean < std::numeric_limits<double>::infinity(); }
};

/// Throws ConfigError on invalid counts, A <= 0, non-positive timescales, or
/// when there are fewer distinct (user, item) pairs than events.
void validate(const GenParams& params);

/// Same seed, same log. Timestamps are step indices; identifiers are the
/// decimal node indices.
EventLog generate(const GenParams& params);

nlohmann::json to_json(const GenParams& params);
GenParams gen_params_from_json(const nlohmann::json& json);

}  // namespace timeprobe
