#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "timeprobe/event_log.hpp"

namespace timeprobe {

/// Immutable bipartite adjacency frozen at a cut time.
///
/// Both orientations are stored in CSR form over the full index space of the
/// originating log; nodes without links simply have degree 0. Neighbor lists
/// are sorted by index so diffusion sums run in a fixed order. Each item also
/// keeps the sorted timestamps of its links for windowed degree queries.
class Snapshot {
 public:
  Snapshot() = default;

  /// Builds from an arbitrary set of events. `cut_time` is recorded as the
  /// snapshot's reference time; events are not filtered by it.
  static Snapshot from_events(std::span<const Event> events, std::size_t user_space, std::size_t item_space,
                              Timestamp cut_time);

  Timestamp cut_time() const noexcept { return cut_time_; }
  std::size_t user_space() const noexcept { return user_degree_.size(); }
  std::size_t item_space() const noexcept { return item_degree_.size(); }
  std::size_t edge_count() const noexcept { return user_items_.size(); }

  /// Number of items with at least one link; the I of the ranking score.
  std::size_t active_item_count() const noexcept { return active_items_; }
  std::size_t active_user_count() const noexcept { return active_users_; }
  std::size_t max_item_degree() const noexcept { return max_item_degree_; }

  std::size_t user_degree(UserIndex u) const noexcept { return user_degree_[u]; }
  std::size_t item_degree(ItemIndex i) const noexcept { return item_degree_[i]; }
  std::span<const std::size_t> item_degrees() const noexcept { return item_degree_; }

  std::span<const ItemIndex> items_of(UserIndex u) const noexcept {
    return {user_items_.data() + user_offsets_[u], user_degree_[u]};
  }
  std::span<const UserIndex> users_of(ItemIndex i) const noexcept {
    return {item_users_.data() + item_offsets_[i], item_degree_[i]};
  }
  std::span<const Timestamp> item_times(ItemIndex i) const noexcept {
    return {item_times_.data() + item_offsets_[i], item_degree_[i]};
  }

  bool has_edge(UserIndex u, ItemIndex i) const noexcept;

  /// Links of `item` in this snapshot with timestamp < t.
  std::size_t item_degree_before(ItemIndex item, Timestamp t) const noexcept;

  /// Links of `item` with timestamp in [t - tau, t), window truncated at 0.
  std::size_t degree_increase(ItemIndex item, Timestamp t, Timestamp tau) const noexcept;

 private:
  Timestamp cut_time_ = 0;
  std::vector<std::size_t> user_offsets_{0};
  std::vector<std::size_t> user_degree_;
  std::vector<ItemIndex> user_items_;
  std::vector<std::size_t> item_offsets_{0};
  std::vector<std::size_t> item_degree_;
  std::vector<UserIndex> item_users_;
  std::vector<Timestamp> item_times_;
  std::size_t active_items_ = 0;
  std::size_t active_users_ = 0;
  std::size_t max_item_degree_ = 0;
};

/// Snapshot of every event with timestamp strictly below t. Any t is
/// accepted; values outside [0, T_m + 1] yield the empty or full snapshot.
Snapshot build_snapshot(const EventLog& log, Timestamp t);

}  // namespace timeprobe
