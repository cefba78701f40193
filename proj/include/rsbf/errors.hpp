#pragma once

#include <stdexcept>
#include <string>

namespace rsbf {

// Bad argument values supplied by a caller (out-of-range index, arity mismatch).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was invoked outside its documented domain (e.g. a mask whose
// top bit contradicts the recursion branch).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Missing or inconsistent configuration, such as an incomplete base table.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace rsbf
