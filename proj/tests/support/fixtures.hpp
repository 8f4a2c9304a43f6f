#pragma once

#include <string>
#include <vector>

#include "timeprobe/event_log.hpp"
#include "timeprobe/snapshot.hpp"

namespace fixtures {

inline timeprobe::RawRecord rec(std::string user, std::string item, timeprobe::Timestamp t) {
  return {std::move(user), std::move(item), t, std::nullopt};
}

/// Users u1, u2; items a, b, c; edges u1a, u1b, u2b, u2c. The u2 links come
/// later so that item b has one link in [4, 6).
inline timeprobe::EventLog four_edge_log() {
  return timeprobe::EventLog::from_records(
      {rec("u1", "a", 1), rec("u1", "b", 1), rec("u2", "b", 5), rec("u2", "c", 5)}, "day");
}

/// Index of an identifier in a log (fails loudly if absent).
inline timeprobe::ItemIndex item(const timeprobe::EventLog& log, const std::string& id) { return log.find_item(id).value(); }
inline timeprobe::UserIndex user(const timeprobe::EventLog& log, const std::string& id) { return log.find_user(id).value(); }

inline timeprobe::Snapshot full_snapshot(const timeprobe::EventLog& log) {
  return timeprobe::build_snapshot(log, log.max_time() + 1);
}

}  // namespace fixtures
