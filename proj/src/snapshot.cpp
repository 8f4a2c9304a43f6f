#include "timeprobe/snapshot.hpp"

#include <algorithm>
#include <numeric>

namespace timeprobe {

Snapshot Snapshot::from_events(std::span<const Event> events, std::size_t user_space, std::size_t item_space,
                               Timestamp cut_time) {
  Snapshot s;
  s.cut_time_ = cut_time;
  s.user_degree_.assign(user_space, 0);
  s.item_degree_.assign(item_space, 0);
  for (const auto& e : events) {
    ++s.user_degree_[e.user];
    ++s.item_degree_[e.item];
  }

  s.user_offsets_.assign(user_space + 1, 0);
  s.item_offsets_.assign(item_space + 1, 0);
  std::partial_sum(s.user_degree_.begin(), s.user_degree_.end(), s.user_offsets_.begin() + 1);
  std::partial_sum(s.item_degree_.begin(), s.item_degree_.end(), s.item_offsets_.begin() + 1);

  s.user_items_.resize(events.size());
  s.item_users_.resize(events.size());
  s.item_times_.resize(events.size());
  std::vector<std::size_t> ucur(s.user_offsets_.begin(), s.user_offsets_.end() - 1);
  std::vector<std::size_t> icur(s.item_offsets_.begin(), s.item_offsets_.end() - 1);
  for (const auto& e : events) {
    s.user_items_[ucur[e.user]++] = e.item;
    s.item_users_[icur[e.item]] = e.user;
    s.item_times_[icur[e.item]++] = e.time;
  }

  for (std::size_t u = 0; u < user_space; ++u) {
    auto* first = s.user_items_.data() + s.user_offsets_[u];
    std::sort(first, first + s.user_degree_[u]);
  }
  for (std::size_t i = 0; i < item_space; ++i) {
    auto* users = s.item_users_.data() + s.item_offsets_[i];
    auto* times = s.item_times_.data() + s.item_offsets_[i];
    std::sort(users, users + s.item_degree_[i]);
    std::sort(times, times + s.item_degree_[i]);
  }

  s.active_items_ = static_cast<std::size_t>(
      std::count_if(s.item_degree_.begin(), s.item_degree_.end(), [](std::size_t k) { return k > 0; }));
  s.active_users_ = static_cast<std::size_t>(
      std::count_if(s.user_degree_.begin(), s.user_degree_.end(), [](std::size_t k) { return k > 0; }));
  s.max_item_degree_ = s.item_degree_.empty() ? 0 : *std::max_element(s.item_degree_.begin(), s.item_degree_.end());
  return s;
}

bool Snapshot::has_edge(UserIndex u, ItemIndex i) const noexcept {
  if (u >= user_space()) return false;
  const auto items = items_of(u);
  return std::binary_search(items.begin(), items.end(), i);
}

std::size_t Snapshot::item_degree_before(ItemIndex item, Timestamp t) const noexcept {
  const auto times = item_times(item);
  return static_cast<std::size_t>(std::lower_bound(times.begin(), times.end(), t) - times.begin());
}

std::size_t Snapshot::degree_increase(ItemIndex item, Timestamp t, Timestamp tau) const noexcept {
  const Timestamp from = std::max<Timestamp>(0, t - tau);
  if (from >= t) return 0;
  return item_degree_before(item, t) - item_degree_before(item, from);
}

Snapshot build_snapshot(const EventLog& log, Timestamp t) {
  const auto events = log.events().first(log.prefix_length(t));
  return Snapshot::from_events(events, log.user_count(), log.item_count(), t);
}

}  // namespace timeprobe
