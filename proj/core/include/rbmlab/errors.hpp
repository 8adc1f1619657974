// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rbmlab {

// Invalid parameters, violated exponent constraints, malformed configs.
// The CLI maps these to exit status 2.
class config_error : public std::invalid_argument {
 public:
  explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical failures at runtime (non-convergence, residual violations).
// The CLI maps these (and other runtime errors) to exit status 1.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what, long long index = -1)
      : std::runtime_error(what), failing_index(index) {}
  long long failing_index;
};

}  // namespace rbmlab
