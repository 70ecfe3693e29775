#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvl {

// Malformed or out-of-range input: bad index, unknown logic name,
// unsupported connective for a chain kind, syntax errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed its configured budget. Never
// replaced by a partial answer.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mvl
