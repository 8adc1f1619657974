// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rbmlab {

struct MeanStderr {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  std::int64_t count = 0;
};

// sample mean with stderr = sample sd / sqrt(n); accumulation is in index
// order so results are independent of how work was scheduled
MeanStderr mean_stderr(std::span<const double> values);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double r_squared = 0.0;
  std::int64_t points = 0;
};

// weighted least squares y ~ intercept + slope * x  (weights >= 0)
LineFit fit_weighted_line(std::span<const double> x, std::span<const double> y,
                          std::span<const double> w);
LineFit fit_line(std::span<const double> x, std::span<const double> y);

double poisson_pmf(double lambda, std::int64_t k);

// regularized upper incomplete gamma Q(a, x); chi-square p-value is
// Q(dof/2, stat/2)
double gamma_q(double a, double x);

// FNV-1a 64-bit over a byte buffer (manifest file inventory)
std::uint64_t fnv1a64(const void* data, std::size_t size);

}  // namespace rbmlab
