#include "timeprobe/error.hpp"

namespace timeprobe {

const char* category_name(Error::Category category) noexcept {
  switch (category) {
    case Error::Category::parse:
      return "parse error";
    case Error::Category::empty_input:
      return "empty input";
    case Error::Category::config:
      return "configuration error";
    case Error::Category::undefined_metric:
      return "undefined metric";
    case Error::Category::experiment:
      return "experiment error";
    case Error::Category::io:
      return "i/o error";
  }
  return "error";
}

}  // namespace timeprobe
