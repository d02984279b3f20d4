#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ehrwt {

// Bad user input: malformed text, violated preconditions, unsupported
// keywords. The CLI maps these to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result failed an internal cross-check (interpolation validation,
// lift identity, series integrality). Signals a bug, never bad input.
// The CLI maps these to exit code 2.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Enumeration would visit more cells than the configured cap allows.
class ResourceLimitError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ehrwt
