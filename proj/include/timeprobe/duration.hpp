#pragma once

#include <cstdint>
#include <string_view>

#include "timeprobe/event_log.hpp"

namespace timeprobe {

/// Length of one native time unit in seconds. Accepted labels: second(s)/s,
/// minute(s)/min/m, hour(s)/h, day(s)/d, week(s)/w. Abstract units such as
/// "step" return 0 and only accept unit-less durations.
std::int64_t unit_seconds(std::string_view unit);

/// Resolves "20d", "1h", "30m", "45s", "2w" or a bare integer (native units)
/// into native units. Throws ConfigError when the value is not a positive
/// whole number of native units.
Timestamp parse_duration(std::string_view text, std::string_view time_unit);

}  // namespace timeprobe
