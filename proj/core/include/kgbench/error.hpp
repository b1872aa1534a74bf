#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kgbench {

// Base for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Turtle document is not conformant. what() is rendered as "line:col: message".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class AssetError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid benchmark configuration; field_path names the offending key
// (e.g. "tasks[1].repetitions").
class ConfigError : public Error {
 public:
  ConfigError(std::string field_path, const std::string& message);

  const std::string& field_path() const noexcept { return field_path_; }

 private:
  std::string field_path_;
};

// A results line could not be read back.
class RecordError : public Error {
 public:
  RecordError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Connector failures. The runner turns these into error records.
class ConnectorError : public Error {
 public:
  using Error::Error;
};

class AuthError : public ConnectorError {
 public:
  using ConnectorError::ConnectorError;
};

class TimeoutError : public ConnectorError {
 public:
  using ConnectorError::ConnectorError;
};

class RateLimitError : public ConnectorError {
 public:
  using ConnectorError::ConnectorError;
};

class ProtocolError : public ConnectorError {
 public:
  using ConnectorError::ConnectorError;
};

// The endpoint answered 5xx. Retried like rate limits.
class UnavailableError : public ConnectorError {
 public:
  using ConnectorError::ConnectorError;
};

class CacheError : public ConnectorError {
 public:
  using ConnectorError::ConnectorError;
};

}  // namespace kgbench
