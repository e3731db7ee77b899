#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chrev {

// Raised when an input exceeds one of the configured enumeration caps
// (atom universe, subset enumeration, partial sums, negation sets).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Formula (or file) syntax error. Carries the byte offset of the offending
// token and a short hint describing what was expected there.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::string expected)
      : std::runtime_error(what + " at byte " + std::to_string(offset) +
                           (expected.empty() ? "" : " (expected " + expected + ")")),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace chrev
