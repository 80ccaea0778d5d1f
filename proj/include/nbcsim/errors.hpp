#pragma once

#include <stdexcept>
#include <string>

namespace nbc {

/// Requested exact computation exceeds the enumeration / exact-arithmetic guard.
class TooLargeError : public std::runtime_error {
 public:
  explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact integer arithmetic would wrap; results are never silently truncated.
class ArithmeticOverflowError : public std::runtime_error {
 public:
  explicit ArithmeticOverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// The error-induced exit distribution is undefined (no error paths exist).
class NoErrorPathsError : public std::runtime_error {
 public:
  explicit NoErrorPathsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nbc
