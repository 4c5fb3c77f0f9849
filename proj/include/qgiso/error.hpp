#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, family specs, graph specs).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Input is valid but outside what the operation supports.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Two metric graphs cannot be compared (different total lengths or units).
class IncomparableError : public Error {
 public:
  using Error::Error;
};

/// Precondition violated by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An invariant that the mathematics guarantees was observed to fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qg
