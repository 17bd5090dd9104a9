#pragma once

#include <stdexcept>
#include <string>

namespace pelltrib {

// Raised when the current working precision cannot decide a floor, a sign or
// a comparison. Callers catch it and retry at a higher precision; it escapes
// only once the PrecisionPolicy cap has been reached.
class InsufficientPrecision : public std::runtime_error {
 public:
  explicit InsufficientPrecision(const std::string& what)
      : std::runtime_error("insufficient precision: " + what) {}
};

// Argument outside an operation's mathematical domain (log of a negative
// interval, Pell equation with a square d, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A certified recomputation disagrees with the value it was expected to
// reproduce, or an internal consistency check failed.
class Discrepancy : public std::runtime_error {
 public:
  explicit Discrepancy(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pelltrib
