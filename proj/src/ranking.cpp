#include "timeprobe/ranking.hpp"

#include <algorithm>

#include "timeprobe/error.hpp"

namespace timeprobe {
namespace {

void check_inputs(std::span<const double> scores, const Snapshot& snapshot, UserIndex user) {
  if (scores.size() != snapshot.item_space()) throw ConfigError("score vector does not match the snapshot");
  if (user >= snapshot.user_space()) throw ConfigError("user index " + std::to_string(user) + " outside the snapshot");
}

}  // namespace

std::vector<ItemIndex> candidate_items(const Snapshot& snapshot, UserIndex user) {
  std::vector<ItemIndex> candidates;
  candidates.reserve(snapshot.active_item_count());
  const auto collected = snapshot.items_of(user);
  auto next = collected.begin();
  for (ItemIndex alpha = 0; alpha < snapshot.item_space(); ++alpha) {
    if (snapshot.item_degree(alpha) == 0) continue;
    if (next != collected.end() && *next == alpha) {
      ++next;
      continue;
    }
    candidates.push_back(alpha);
  }
  return candidates;
}

RecommendationList rank_items(std::span<const double> scores, const Snapshot& snapshot, UserIndex user,
                              std::size_t list_length) {
  if (list_length < 1) throw ConfigError("list length must be at least 1");
  check_inputs(scores, snapshot, user);
  auto candidates = candidate_items(snapshot, user);
  const auto before = [&](ItemIndex a, ItemIndex b) { return ranks_before(scores[a], a, scores[b], b); };
  const auto top = std::min(list_length, candidates.size());
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(top), candidates.end(), before);
  candidates.resize(top);

  RecommendationList list;
  list.user = user;
  list.scores.reserve(top);
  for (const auto alpha : candidates) list.scores.push_back(scores[alpha]);
  list.items = std::move(candidates);
  return list;
}

FullRanking full_ranking(std::span<const double> scores, const Snapshot& snapshot, UserIndex user) {
  check_inputs(scores, snapshot, user);
  FullRanking ranking{user, candidate_items(snapshot, user)};
  std::sort(ranking.items.begin(), ranking.items.end(),
            [&](ItemIndex a, ItemIndex b) { return ranks_before(scores[a], a, scores[b], b); });
  return ranking;
}

std::size_t rank_position(std::span<const double> scores, const Snapshot& snapshot, UserIndex user, ItemIndex item) {
  check_inputs(scores, snapshot, user);
  if (item >= snapshot.item_space() || snapshot.item_degree(item) == 0 || snapshot.has_edge(user, item)) return 0;
  std::size_t ahead = 0;
  for (const auto alpha : candidate_items(snapshot, user))
    if (ranks_before(scores[alpha], alpha, scores[item], item)) ++ahead;
  return ahead + 1;
}

}  // namespace timeprobe
