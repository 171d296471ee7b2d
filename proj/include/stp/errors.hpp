#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stp {

/// A partition whose class map does not fit the graph or ground set.
class InvalidPartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested fundamental cycle does not exist (endpoints not joined by the tree).
class NoCycleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A guarantee of the packing procedure was broken. Signals a bug, never an
/// input property.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed graph file; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace stp
