// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rbmlab/band_matrix.hpp"
#include "rbmlab/banded_lu.hpp"

namespace rbmlab {

// column j of (H - z)^{-1}, Im z > 0, by a banded LU solve with residual check
std::vector<std::complex<double>> greens_column(const BandMatrix& m, std::int64_t j,
                                                std::complex<double> z);

enum class DecayFitStatus {
  ok,           // positive decay rate fitted on the tail
  delocalized,  // fitted rate <= 0 (or insufficient decay range)
  all_zero,     // every tail moment vanished (e.g. L = 0); rate = +infinity
};

struct DecayFit {
  std::vector<std::int64_t> distances;
  std::vector<double> log_moments;     // log E|G(j, j+d)|^s  (NaN where moment = 0)
  std::vector<double> moment_stderr;   // stderr of the moment itself
  double rate = 0.0;                   // decay per index step on the tail d > 2W
  double loc_length = 0.0;             // 1 / rate
  double prefactor_exponent = 0.0;     // intercept / (s * alpha * log N); NaN if alpha = 0
  double r_squared = 0.0;
  std::int64_t tail_points = 0;
  DecayFitStatus status = DecayFitStatus::ok;
};

struct DecayOptions {
  std::int64_t trials = 1000;
  bool median_of_means = false;
  std::int64_t mom_groups = 16;
};

// Monte Carlo E{|G(j, j+d; z)|^s} over the distance grid, then a weighted
// log-linear fit on the tail d > 2W. Trial t uses matrix seed
// derive_seed(params.seed, 0, t); one solve per trial yields the whole probe
// column. probe_row is a logical index (-N..N) and must sit at least
// max(distances) away from both edges.
DecayFit fractional_moment_decay(const BandMatrixParams& params, std::complex<double> z, double s,
                                 std::int64_t probe_row, const std::vector<std::int64_t>& distances,
                                 const DecayOptions& options);

// localization length over system scale, kappa_N = loc_length / N
double kappa_ratio(double loc_length, std::int64_t half_size);

}  // namespace rbmlab
