#pragma once

#include <stdexcept>
#include <string>

namespace biphoton {

/// Requested computation exceeds the declared numerical validity range
/// (aliasing guard, refinement cap, eigensolver non-convergence).
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input; message names the offending line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace biphoton
