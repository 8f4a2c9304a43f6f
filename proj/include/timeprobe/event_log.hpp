#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace timeprobe {

/// Integer time in the dataset's native unit (days, minutes, steps, ...).
using Timestamp = std::int64_t;
using UserIndex = std::uint32_t;
using ItemIndex = std::uint32_t;

/// One link-creation event with dense node indices.
struct Event {
  UserIndex user = 0;
  ItemIndex item = 0;
  Timestamp time = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

/// An event as read from disk, before identifiers are interned.
struct RawRecord {
  std::string user;
  std::string item;
  Timestamp time = 0;
  std::optional<double> rating;
};

/// How to read a delimiter-separated event file.
struct IngestConfig {
  char delimiter = '\t';
  std::size_t user_column = 0;
  std::size_t item_column = 1;
  std::size_t time_column = 2;
  std::optional<std::size_t> rating_column;
  bool has_header = false;
  /// Records with rating below this value are dropped. Requires rating_column.
  std::optional<double> rating_threshold;
  /// Label of the native time unit; resolves durations such as "1d".
  std::string time_unit = "day";
  /// Shift all timestamps so the earliest event is at time 0.
  bool rebase_time = false;
};

/// Orders identifiers "naturally": all-digit identifiers by numeric value and
/// before everything else, the rest lexicographically. Dense indices follow
/// this order, so ascending index is ascending identifier.
bool identifier_less(std::string_view a, std::string_view b) noexcept;

/// Canonical, immutable, time-ordered event log.
///
/// Events are unique per (user, item) pair (earliest timestamp kept) and
/// sorted by timestamp with ties in input order. Every user and item index in
/// [0, user_count()) / [0, item_count()) appears in at least one event.
class EventLog {
 public:
  EventLog() = default;

  /// Interns identifiers, deduplicates and sorts. Throws EmptyLogError if no
  /// record survives and ConfigError on negative timestamps.
  static EventLog from_records(std::vector<RawRecord> records, std::string time_unit = "day");

  std::span<const Event> events() const noexcept { return events_; }
  std::size_t event_count() const noexcept { return events_.size(); }
  std::size_t user_count() const noexcept { return user_ids_.size(); }
  std::size_t item_count() const noexcept { return item_ids_.size(); }
  bool empty() const noexcept { return events_.empty(); }

  /// Latest timestamp, T_m. The time span is [0, T_m].
  Timestamp max_time() const noexcept { return events_.empty() ? 0 : events_.back().time; }
  Timestamp min_time() const noexcept { return events_.empty() ? 0 : events_.front().time; }

  const std::string& time_unit() const noexcept { return time_unit_; }
  const std::string& user_id(UserIndex u) const { return user_ids_.at(u); }
  const std::string& item_id(ItemIndex i) const { return item_ids_.at(i); }
  std::optional<UserIndex> find_user(std::string_view id) const;
  std::optional<ItemIndex> find_item(std::string_view id) const;

  /// Sorted link timestamps of one item.
  std::span<const Timestamp> item_times(ItemIndex item) const;

  /// k_item(t): number of links with timestamp < t.
  std::size_t item_degree_at(ItemIndex item, Timestamp t) const;

  /// Links of `item` with timestamp in [t - tau, t), window truncated at 0.
  std::size_t degree_increase(ItemIndex item, Timestamp t, Timestamp tau) const;
  /// Same, by identifier; unknown items have no links.
  std::size_t degree_increase(std::string_view item, Timestamp t, Timestamp tau) const;

  /// Number of events with timestamp < t (events are a sorted sequence, so
  /// these form a prefix).
  std::size_t prefix_length(Timestamp t) const;

 private:
  std::vector<Event> events_;
  std::vector<std::string> user_ids_;
  std::vector<std::string> item_ids_;
  std::unordered_map<std::string, UserIndex> user_lookup_;
  std::unordered_map<std::string, ItemIndex> item_lookup_;
  std::vector<std::size_t> item_offsets_;
  std::vector<Timestamp> item_times_;
  std::string time_unit_ = "day";
};

/// Reads one event per line. Malformed lines raise ParseError with the
/// 1-based line number; an empty result raises EmptyLogError.
EventLog parse_events(std::istream& in, const IngestConfig& config);
EventLog load_events(const std::filesystem::path& path, const IngestConfig& config);

/// Writes user_id, item_id, timestamp per line (the format load_events reads
/// with the default config).
void write_events(std::ostream& out, const EventLog& log, char delimiter = '\t');
void write_events(std::ostream& out, const EventLog& log, std::span<const Event> events, char delimiter = '\t');

}  // namespace timeprobe
