#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qseries {

// Malformed TruncatedSeries construction (length/order mismatch).
class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Division by a series whose leading coefficient is not a unit.
class NonInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument outside an operation's domain (composite "prime", a+b = 0 theta, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A failed theorem precondition; verification reports these as skipped.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace qseries
