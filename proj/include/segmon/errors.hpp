#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segmon {

/// A value failed a structural constraint: element coordinates outside the
/// admissible region, an ideal bound outside its range, a malformed rook
/// matrix, or unusable textual/JSON input.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message)
      : std::runtime_error(message) {}
};

/// An operation was applied outside its domain: mismatched ambient sizes, a
/// root of the zero element, a nonpositive exponent, coordinates of the zero
/// element.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& message)
      : std::runtime_error(message) {}
};

/// Rejection of textual input, carrying the 0-based offset of the rejection
/// and the tokens that would have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position,
             std::vector<std::string> expected = {})
      : std::runtime_error(message + " (offset " + std::to_string(position) +
                           ")"),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace segmon
