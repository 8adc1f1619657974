// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "rbmlab/errors.hpp"

namespace rbmlab {

// Half-open interval (lo, hi]. Eigenvalue counts over (a, b] compose exactly
// as count(<= b) - count(<= a), so every counting surface in the library uses
// this convention.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double x) const { return lo < x && x <= hi; }
  bool empty() const { return hi <= lo; }

  void require_ordered(const char* what = "interval") const {
    if (!(lo < hi)) {
      throw config_error(std::string(what) + ": lower endpoint must be < upper endpoint");
    }
  }
};

inline Interval scale_shift(const Interval& iv, double scale, double shift) {
  return Interval{iv.lo * scale + shift, iv.hi * scale + shift};
}

}  // namespace rbmlab
