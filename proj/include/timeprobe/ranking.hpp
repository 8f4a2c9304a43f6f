#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "timeprobe/snapshot.hpp"

namespace timeprobe {

/// Top-L recommendations for one user.
struct RecommendationList {
  UserIndex user = 0;
  std::vector<ItemIndex> items;
  std::vector<double> scores;
};

/// Complete ordering of a user's rankable items.
struct FullRanking {
  UserIndex user = 0;
  std::vector<ItemIndex> items;
};

/// Strict total order used everywhere: higher score first, then lower index.
inline bool ranks_before(double score_a, ItemIndex a, double score_b, ItemIndex b) noexcept {
  return score_a > score_b || (score_a == score_b && a < b);
}

/// Items with training links that `user` has not collected.
std::vector<ItemIndex> candidate_items(const Snapshot& snapshot, UserIndex user);

/// Top-L candidate items by (score desc, index asc).
RecommendationList rank_items(std::span<const double> scores, const Snapshot& snapshot, UserIndex user,
                              std::size_t list_length);

FullRanking full_ranking(std::span<const double> scores, const Snapshot& snapshot, UserIndex user);

/// 1-based position of `item` among the user's candidates, or 0 when the item
/// is not rankable (no training links, or already collected).
std::size_t rank_position(std::span<const double> scores, const Snapshot& snapshot, UserIndex user, ItemIndex item);

}  // namespace timeprobe
