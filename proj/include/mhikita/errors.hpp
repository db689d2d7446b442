#pragma once

#include <stdexcept>
#include <string>

namespace mh {

// mismatched contexts, bounds, shapes
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// bad user data: degenerate chi/sigma, malformed files, bad primes
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a certificate that could not be produced (non-central input, refusal, ...)
struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mh
