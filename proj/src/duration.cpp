#include "timeprobe/duration.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "timeprobe/error.hpp"

namespace timeprobe {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::int64_t unit_seconds(std::string_view unit) {
  const auto u = lower(unit);
  if (u == "s" || u == "sec" || u == "second" || u == "seconds") return 1;
  if (u == "m" || u == "min" || u == "minute" || u == "minutes") return 60;
  if (u == "h" || u == "hour" || u == "hours") return 3600;
  if (u == "d" || u == "day" || u == "days") return 86400;
  if (u == "w" || u == "week" || u == "weeks") return 7 * 86400;
  return 0;
}

Timestamp parse_duration(std::string_view text, std::string_view time_unit) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  std::int64_t amount = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), amount);
  if (ec != std::errc{} || ptr == text.data()) throw ConfigError("invalid duration '" + std::string(text) + "'");
  if (amount <= 0) throw ConfigError("duration must be positive: '" + std::string(text) + "'");

  const std::string_view suffix(ptr, static_cast<std::size_t>(text.data() + text.size() - ptr));
  if (suffix.empty()) return amount;

  const auto suffix_seconds = unit_seconds(suffix);
  if (suffix_seconds == 0) throw ConfigError("unknown duration suffix '" + std::string(suffix) + "'");
  const auto native = unit_seconds(time_unit);
  if (native == 0)
    throw ConfigError("duration '" + std::string(text) + "' has a suffix but time unit '" + std::string(time_unit) +
                      "' has no physical length");
  const auto total = amount * suffix_seconds;
  if (total % native != 0)
    throw ConfigError("duration '" + std::string(text) + "' is not a whole number of " + std::string(time_unit) + "s");
  return total / native;
}

}  // namespace timeprobe
