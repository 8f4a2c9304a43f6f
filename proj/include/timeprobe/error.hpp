#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace timeprobe {

/// Base class for every error raised by the library. The category is used
/// by the CLI to pick an exit code.
class Error : public std::runtime_error {
 public:
  enum class Category { parse, empty_input, config, undefined_metric, experiment, io };

  Error(Category category, const std::string& what) : std::runtime_error(what), category_(category) {}

  Category category() const noexcept { return category_; }

 private:
  Category category_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Category::parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyLogError : public Error {
 public:
  explicit EmptyLogError(const std::string& what) : Error(Category::empty_input, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(Category::config, what) {}
};

/// Raised when a metric has no defined value, e.g. recall over an empty probe
/// or a Pearson correlation of a constant series.
class UndefinedMetricError : public Error {
 public:
  explicit UndefinedMetricError(const std::string& what) : Error(Category::undefined_metric, what) {}
};

class ExperimentError : public Error {
 public:
  explicit ExperimentError(const std::string& what) : Error(Category::experiment, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(Category::io, what) {}
};

const char* category_name(Error::Category category) noexcept;

}  // namespace timeprobe
