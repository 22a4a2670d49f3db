#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trank {

// Input-level failure (CLI exit code 2).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Requested oracle does not soundly apply to the presentation (CLI exit code 2).
class OracleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A configurable resource limit was hit (CLI exit code 3).
class CapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace trank
