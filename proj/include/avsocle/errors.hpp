#pragma once

#include <stdexcept>
#include <string>

namespace avsocle {

// Malformed or out-of-domain input (bad text form, size mismatch, ...).
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Well-formed input outside the supported parameter family
// (e.g. a principal series without integral infinitesimal character).
struct unsupported_parameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A theorem hypothesis fails; the computation is refused rather than guessed.
struct hypothesis_not_met : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configurable enumeration cap was exceeded.
struct limit_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace avsocle
