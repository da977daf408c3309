#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace codeg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments (degree mismatch, non-prime where a prime is needed, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured resource cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Input that is well formed but outside what an operation supports
/// (e.g. Fitting height of a non-solvable group).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Text parsing failure; `position()` is the 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        message_(what),
        position_(position) {}

  /// The message without the position suffix.
  [[nodiscard]] const std::string& message() const noexcept { return message_; }
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// Resource caps shared by all enumeration-based algorithms.
struct Limits {
  /// Largest group order for which elements are enumerated.
  std::uint64_t order_cap = 100000;
  /// Largest permutation degree produced by coset actions and vector-space actions.
  std::uint64_t degree_cap = 10000;
};

}  // namespace codeg
