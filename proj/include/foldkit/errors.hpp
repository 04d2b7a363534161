#pragma once

#include <stdexcept>

namespace foldkit {

// Invalid parameter or malformed input. The CLI maps this to exit code 2.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numeric failure: lost root bracket, non-finite model output, degenerate
// statistics. The CLI maps this to exit code 3.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File read/write failure. The CLI maps this to exit code 4.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace foldkit
