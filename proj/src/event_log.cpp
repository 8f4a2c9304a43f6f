#include "timeprobe/event_log.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "timeprobe/error.hpp"

namespace timeprobe {
namespace {

bool all_digits(std::string_view s) noexcept {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_leading_zeros(std::string_view s) noexcept {
  const auto pos = s.find_first_not_of('0');
  return pos == std::string_view::npos ? s.substr(s.size() - 1) : s.substr(pos);
}

std::string_view trim(std::string_view s) noexcept {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  if (delimiter == ' ') {
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto start = line.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      const auto end = line.find_first_of(" \t", start);
      fields.push_back(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
      pos = end == std::string_view::npos ? line.size() : end;
    }
    return fields;
  }
  std::size_t start = 0;
  while (true) {
    const auto end = line.find(delimiter, start);
    fields.push_back(trim(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return fields;
}

template <class T>
bool parse_number(std::string_view text, T& value) {
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last && first != last;
}

std::vector<std::string> intern(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end(), [](const std::string& a, const std::string& b) { return identifier_less(a, b); });
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace

bool identifier_less(std::string_view a, std::string_view b) noexcept {
  const bool a_num = all_digits(a);
  const bool b_num = all_digits(b);
  if (a_num != b_num) return a_num;
  if (a_num) {
    const auto sa = strip_leading_zeros(a);
    const auto sb = strip_leading_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

EventLog EventLog::from_records(std::vector<RawRecord> records, std::string time_unit) {
  if (records.empty()) throw EmptyLogError("event log is empty");

  // Stable sort by time keeps input order among equal timestamps, so the
  // first occurrence of a pair in this order is its earliest one.
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return records[a].time < records[b].time; });

  std::unordered_set<std::string> seen_pairs;
  seen_pairs.reserve(records.size());
  std::vector<std::size_t> kept;
  kept.reserve(records.size());
  for (const auto idx : order) {
    const auto& r = records[idx];
    if (r.time < 0) throw ConfigError("negative timestamp for user '" + r.user + "', item '" + r.item + "'");
    std::string key;
    key.reserve(r.user.size() + r.item.size() + 1);
    key.append(r.user).push_back('\0');
    key.append(r.item);
    if (seen_pairs.insert(std::move(key)).second) kept.push_back(idx);
  }

  std::vector<std::string> users;
  std::vector<std::string> items;
  users.reserve(kept.size());
  items.reserve(kept.size());
  for (const auto idx : kept) {
    users.push_back(records[idx].user);
    items.push_back(records[idx].item);
  }

  EventLog log;
  log.time_unit_ = std::move(time_unit);
  log.user_ids_ = intern(std::move(users));
  log.item_ids_ = intern(std::move(items));
  log.user_lookup_.reserve(log.user_ids_.size());
  log.item_lookup_.reserve(log.item_ids_.size());
  for (std::size_t u = 0; u < log.user_ids_.size(); ++u) log.user_lookup_.emplace(log.user_ids_[u], static_cast<UserIndex>(u));
  for (std::size_t i = 0; i < log.item_ids_.size(); ++i) log.item_lookup_.emplace(log.item_ids_[i], static_cast<ItemIndex>(i));

  log.events_.reserve(kept.size());
  for (const auto idx : kept) {
    const auto& r = records[idx];
    log.events_.push_back({log.user_lookup_.at(r.user), log.item_lookup_.at(r.item), r.time});
  }

  // Per-item timestamp lists; events are already time-sorted.
  log.item_offsets_.assign(log.item_ids_.size() + 1, 0);
  for (const auto& e : log.events_) ++log.item_offsets_[e.item + 1];
  std::partial_sum(log.item_offsets_.begin(), log.item_offsets_.end(), log.item_offsets_.begin());
  log.item_times_.resize(log.events_.size());
  std::vector<std::size_t> cursor(log.item_offsets_.begin(), log.item_offsets_.end() - 1);
  for (const auto& e : log.events_) log.item_times_[cursor[e.item]++] = e.time;
  return log;
}

std::optional<UserIndex> EventLog::find_user(std::string_view id) const {
  const auto it = user_lookup_.find(std::string(id));
  if (it == user_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<ItemIndex> EventLog::find_item(std::string_view id) const {
  const auto it = item_lookup_.find(std::string(id));
  if (it == item_lookup_.end()) return std::nullopt;
  return it->second;
}

std::span<const Timestamp> EventLog::item_times(ItemIndex item) const {
  if (item >= item_ids_.size()) return {};
  return {item_times_.data() + item_offsets_[item], item_offsets_[item + 1] - item_offsets_[item]};
}

std::size_t EventLog::item_degree_at(ItemIndex item, Timestamp t) const {
  const auto times = item_times(item);
  return static_cast<std::size_t>(std::lower_bound(times.begin(), times.end(), t) - times.begin());
}

std::size_t EventLog::degree_increase(ItemIndex item, Timestamp t, Timestamp tau) const {
  const Timestamp from = std::max<Timestamp>(0, t - tau);
  if (from >= t) return 0;
  return item_degree_at(item, t) - item_degree_at(item, from);
}

std::size_t EventLog::degree_increase(std::string_view item, Timestamp t, Timestamp tau) const {
  const auto idx = find_item(item);
  return idx ? degree_increase(*idx, t, tau) : 0;
}

std::size_t EventLog::prefix_length(Timestamp t) const {
  const auto it = std::lower_bound(events_.begin(), events_.end(), t,
                                   [](const Event& e, Timestamp value) { return e.time < value; });
  return static_cast<std::size_t>(it - events_.begin());
}

EventLog parse_events(std::istream& in, const IngestConfig& config) {
  if (config.rating_threshold && !config.rating_column)
    throw ConfigError("rating threshold given without a rating column");

  std::size_t needed = std::max({config.user_column, config.item_column, config.time_column}) + 1;
  if (config.rating_column) needed = std::max(needed, *config.rating_column + 1);

  std::vector<RawRecord> records;
  std::string line;
  std::size_t line_no = 0;
  bool header_pending = config.has_header;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    const auto fields = split_fields(content, config.delimiter);
    if (fields.size() < needed)
      throw ParseError(line_no, "expected at least " + std::to_string(needed) + " fields, got " +
                                    std::to_string(fields.size()));

    RawRecord record;
    record.user = std::string(fields[config.user_column]);
    record.item = std::string(fields[config.item_column]);
    if (record.user.empty() || record.item.empty()) throw ParseError(line_no, "empty user or item identifier");
    if (!parse_number(fields[config.time_column], record.time))
      throw ParseError(line_no, "invalid timestamp '" + std::string(fields[config.time_column]) + "'");
    if (record.time < 0 && !config.rebase_time) throw ParseError(line_no, "negative timestamp");
    if (config.rating_column) {
      double rating = 0.0;
      if (!parse_number(fields[*config.rating_column], rating))
        throw ParseError(line_no, "invalid rating '" + std::string(fields[*config.rating_column]) + "'");
      record.rating = rating;
      if (config.rating_threshold && rating < *config.rating_threshold) continue;
    }
    records.push_back(std::move(record));
  }
  if (records.empty()) throw EmptyLogError("no events left after parsing and filtering");

  if (config.rebase_time) {
    const auto min_time =
        std::min_element(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.time < b.time; })
            ->time;
    for (auto& r : records) r.time -= min_time;
  }
  return EventLog::from_records(std::move(records), config.time_unit);
}

EventLog load_events(const std::filesystem::path& path, const IngestConfig& config) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open event file '" + path.string() + "'");
  return parse_events(in, config);
}

void write_events(std::ostream& out, const EventLog& log, std::span<const Event> events, char delimiter) {
  for (const auto& e : events)
    out << log.user_id(e.user) << delimiter << log.item_id(e.item) << delimiter << e.time << '\n';
}

void write_events(std::ostream& out, const EventLog& log, char delimiter) {
  write_events(out, log, log.events(), delimiter);
}

}  // namespace timeprobe
