#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke a documented precondition (arity mismatch, zero input, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A watchdog bound (reduction steps, processed pairs) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial text; `position()` is a 0-based byte offset.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : UsageError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lsb
