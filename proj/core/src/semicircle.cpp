// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#include "rbmlab/semicircle.hpp"

#include <algorithm>
#include <cmath>

namespace rbmlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double semicircle_density(double energy) {
  const double disc = 4.0 - energy * energy;
  return disc > 0.0 ? std::sqrt(disc) / (2.0 * kPi) : 0.0;
}

double semicircle_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  // antiderivative (x sqrt(4-x^2)/4 + asin(x/2)) / pi, shifted to vanish at -2
  return (x * std::sqrt(4.0 - x * x) / 4.0 + std::asin(x / 2.0)) / kPi + 0.5;
}

double semicircle_measure(const Interval& j) {
  const double lo = std::clamp(j.lo, -2.0, 2.0);
  const double hi = std::clamp(j.hi, -2.0, 2.0);
  if (hi <= lo) return 0.0;
  return semicircle_cdf(hi) - semicircle_cdf(lo);
}

}  // namespace rbmlab
