#include "kgbench/error.hpp"

#include <utility>

namespace kgbench {

ParseError::ParseError(std::size_t line, std::size_t column, std::string message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

ConfigError::ConfigError(std::string field_path, const std::string& message)
    : Error(field_path.empty() ? message : field_path + ": " + message),
      field_path_(std::move(field_path)) {}

RecordError::RecordError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace kgbench
