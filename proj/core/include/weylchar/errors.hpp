#pragma once

#include <stdexcept>
#include <string>

namespace weylchar {

// Malformed or out-of-contract input: bad shapes, size mismatches, bad files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal identity failed to hold. Always a bug in the engine, never a
// property of the input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class OverflowError : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

}  // namespace weylchar
