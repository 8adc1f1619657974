// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rbmlab/interval.hpp"

namespace rbmlab {

// n_sc(E) = (1/2pi) sqrt((4 - E^2)_+)
double semicircle_density(double energy);

// N_sc(x) = integral of n_sc over (-2, x]; 0 at -2, 1 at 2, clamped outside.
double semicircle_cdf(double x);

// integral of n_sc over J (endpoints clipped to [-2, 2])
double semicircle_measure(const Interval& j);

}  // namespace rbmlab
