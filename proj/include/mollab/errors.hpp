#pragma once

#include <stdexcept>

namespace mollab {

// Thrown when an iterative numeric routine fails to meet its tolerance
// within its budget (quadrature refinement, optimizer fallback, ...).
struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mollab
