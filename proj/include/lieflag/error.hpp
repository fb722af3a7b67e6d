#pragma once

#include <stdexcept>
#include <string>

namespace lieflag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested instance has no pinned data (e.g. a conormed polynomial
/// outside the two known cases).
class NotSpecifiedBySource : public Error {
 public:
  explicit NotSpecifiedBySource(const std::string& what)
      : Error("not specified by source: " + what) {}
};

}  // namespace lieflag
