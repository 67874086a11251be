#pragma once

#include <stdexcept>
#include <string>

namespace galecross {

// Raised when an argument violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised for inputs outside the supported desk-scale range (e.g. dual dimension > 4).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// A runtime-checked invariant failed. Under exact arithmetic this means a bug.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace galecross
