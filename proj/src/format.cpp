#include "timeprobe/format.hpp"

#include <array>
#include <charconv>

namespace timeprobe {

std::string format_number(double value) {
  std::array<char, 64> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return {buffer.data(), result.ptr};
}

}  // namespace timeprobe
