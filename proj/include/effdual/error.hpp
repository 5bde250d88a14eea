#pragma once

#include <stdexcept>
#include <string>

namespace effdual {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid signature, unknown index name, or out-of-range carrier element.
class SignatureError : public Error {
public:
  using Error::Error;
};

// Ill-typed term, ill-shaped function table, or value/object mismatch.
class TypeError : public Error {
public:
  using Error::Error;
};

// Syntax error with a 1-based source position.
class ParseError : public Error {
public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

// Term contains a constructor outside the dualizable fragment.
class DualityError : public Error {
public:
  explicit DualityError(const std::string& offender)
      : Error(offender + " has no dual"), offender_(offender) {}

  const std::string& offender() const noexcept { return offender_; }

private:
  std::string offender_;
};

// Configuration file problems, split by phase.
class ConfigError : public Error {
public:
  enum class Kind { io, malformed, invalid };

  ConfigError(Kind kind, const std::string& message)
      : Error(prefix(kind) + message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

private:
  static std::string prefix(Kind kind) {
    switch (kind) {
      case Kind::io: return "config i/o error: ";
      case Kind::malformed: return "config parse error: ";
      case Kind::invalid: return "config validation error: ";
    }
    return "config error: ";
  }

  Kind kind_;
};

}  // namespace effdual
