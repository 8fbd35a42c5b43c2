#pragma once

#include <stdexcept>
#include <string>

namespace p2coh {

// Malformed text input or a non-integral Chern character.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntegralityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The operation needs a (semi)stable character and none exists.
struct UnstableCharacterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DepthExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace p2coh
