#pragma once

#include <stdexcept>
#include <string>

namespace rdd {

// Thrown for invalid inputs: malformed files, broken type invariants, bad
// arguments. The CLI maps it to exit code 2; anything else is an internal
// error (exit 1).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace rdd
