#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "timeprobe/probes.hpp"
#include "timeprobe/ranking.hpp"
#include "timeprobe/snapshot.hpp"

namespace timeprobe {

/// Probe items of one user, ascending.
struct UserProbe {
  UserIndex user = 0;
  std::vector<ItemIndex> items;
};

/// Groups probe events by user (ascending user index).
std::vector<UserProbe> group_probe(std::span<const Event> probe);

/// Per-user evaluation terms.
struct UserOutcome {
  UserIndex user = 0;
  std::size_t probe_item_count = 0;
  std::size_t hits = 0;
  /// One entry per probe item, in (0, 1]; 1.0 for items that cannot be ranked.
  std::vector<double> relative_ranks;
  /// Mean training degree of the top-L list; meaningful when list_length > 0.
  double top_degree_mean = 0.0;
  std::size_t list_length = 0;
};

/// Computes hits, relative ranks and top-L degree for one user in a single
/// O(I * (1 + |probe items|)) pass, without sorting the full ranking.
UserOutcome user_outcome(std::span<const double> scores, const Snapshot& snapshot, const UserProbe& probe,
                         std::size_t list_length);

/// Recall, ranking score and k_R aggregated over users.
struct MetricsReport {
  std::string method;
  nlohmann::json params = nlohmann::json::object();
  double recall = 0.0;
  double ranking_score = 0.0;
  double mean_top_degree = 0.0;
  std::size_t list_length = 50;
  nlohmann::json probe = nlohmann::json::object();
  double cold_fraction = 0.0;
  std::size_t users = 0;
  std::size_t probe_entries = 0;
};

/// Reduces outcomes in the given order. Throws UndefinedMetricError when no
/// outcome carries a probe entry.
MetricsReport summarize(std::span<const UserOutcome> outcomes, std::size_t list_length);

/// Mean over users with probe entries of hits / |user's probe items|. A user
/// without a list counts as all misses. Throws UndefinedMetricError for an
/// empty probe.
double recall_at_L(std::span<const RecommendationList> lists, std::span<const Event> probe, std::size_t list_length);

/// Mean over probe entries of position / (I - k_user), I = snapshot items with
/// links. Unrankable entries contribute 1.0. Every probe user needs a ranking.
double ranking_score(std::span<const FullRanking> rankings, std::span<const Event> probe, const Snapshot& snapshot);

/// Mean over lists of the mean training degree of their first L items; empty
/// lists are skipped. Returns 0 when no list has items.
double avg_degree_top_L(std::span<const RecommendationList> lists, const Snapshot& snapshot, std::size_t list_length);

nlohmann::json to_json(const MetricsReport& report);

}  // namespace timeprobe
