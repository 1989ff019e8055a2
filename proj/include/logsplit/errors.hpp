#pragma once
#include <stdexcept>
#include <string>

namespace logsplit {

// Input could not be parsed: syntax error, non-homogeneous polynomial,
// zero polynomial, degenerate arrangement rows, malformed file.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical fact that must hold for valid input failed to hold.
// Either a non-reduced curve slipped past validation or there is a bug.
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

// Random line sampling exhausted its retry budget without certifying a
// generic value.
struct GenericityError : std::runtime_error {
  explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace logsplit
