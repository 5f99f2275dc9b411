#pragma once

#include <stdexcept>
#include <string>

namespace fieldlink {

/// File access failure.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user-supplied configuration (file contents, CLI overrides, step sizes).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Config-file syntax errors; carries the line number in the message.
class ParseError : public ConfigError {
 public:
  explicit ParseError(const std::string& what) : ConfigError(what) {}
};

/// A numerical precondition failed (non-unitary input, singular distance, ...).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed; the message names the invariant.
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fieldlink
