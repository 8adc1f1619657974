// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "rbmlab/band_matrix.hpp"
#include "rbmlab/eigensolver.hpp"
#include "rbmlab/interval.hpp"

namespace rbmlab {

// Rescaled counting window around a bulk energy E0: counts are taken over the
// physical interval E0 + I/N. The physical window must stay inside
// (-2 - margin, 2 + margin) with margin 0.5.
struct RescaleWindow {
  double center_energy = 0.0;  // E0 in (-2, 2)
  Interval window{0.0, 1.0};   // I, in rescaled units

  Interval physical(std::int64_t half_size) const {
    return scale_shift(window, 1.0 / static_cast<double>(half_size), center_energy);
  }
  void validate(std::int64_t half_size) const;
};

// count of rescaled eigenvalues N(E_j - E0) falling in I, one realization
struct LESSample {
  RescaleWindow window;
  std::int64_t half_size = 0;
  std::int64_t count = 0;
};

LESSample les_count(const Spectrum& spectrum, const RescaleWindow& w);
// Sturm-count path (no full solve); both paths agree realization by
// realization.
LESSample les_count(const Tridiagonal& t, std::int64_t half_size, const RescaleWindow& w);

// Monte Carlo estimate of E{Tr chi_I(H)} from i.i.d. interval counts
double wegner_moment(std::span<const IntervalCount> samples);
// Monte Carlo estimate of the second factorial moment E{k(k-1)}
double minami_moment(std::span<const IntervalCount> samples);

struct IntensityEstimate {
  RescaleWindow window;
  std::int64_t half_size = 0;
  double b_n = 0.0;
  double stderr_of_mean = 0.0;
  std::int64_t trials = 0;
};

// b_N(I, E0) = mean rescaled-window count; trial t uses matrix seed
// derive_seed(params.seed, 0, t).
IntensityEstimate intensity_bn(const RescaleWindow& w, const BandMatrixParams& params,
                               std::int64_t trials);
IntensityEstimate intensity_from_counts(const RescaleWindow& w, std::int64_t half_size,
                                        std::span<const std::int64_t> counts);

// trapezoidal quadrature of b_N(I, E0) over E0 in J (>= 8 nodes); the same
// realizations serve every node since the matrix law does not depend on E0
double intensity_integrated(const Interval& j_range, const Interval& window,
                            const BandMatrixParams& params, std::int64_t nodes,
                            std::int64_t trials);

struct CharExponentEstimate {
  std::vector<double> t_grid;
  std::vector<std::complex<double>> psi;   // log empirical characteristic function
  std::vector<double> psi_stderr;          // |ecf| stderr propagated through log
  std::vector<bool> valid;                 // |ecf| >= 10 * stderr
  std::int64_t trials = 0;
};

std::vector<double> default_t_grid(std::int64_t nodes = 64);  // [-pi, pi]

CharExponentEstimate char_exponent(std::span<const LESSample> samples,
                                   std::vector<double> t_grid);
CharExponentEstimate char_exponent_from_counts(std::span<const std::int64_t> counts,
                                               std::vector<double> t_grid);

// mean of r_j = min(g_j, g_{j+1}) / max(g_j, g_{j+1}) over the eigenvalues in
// [E0 - halfwidth, E0 + halfwidth]; needs >= 3 of them
double gap_ratio_statistic(const Spectrum& spectrum, double center_energy, double halfwidth);
double gap_ratio_statistic(std::span<const double> sorted_eigenvalues, double center_energy,
                           double halfwidth);

inline constexpr double kPoissonGapRatio = 0.3862943611198906;  // 2 ln 2 - 1

struct PoissonFitRow {
  std::int64_t k = 0;
  std::int64_t observed = 0;
  double expected = 0.0;
};

struct PoissonFitReport {
  double lambda = 0.0;
  std::int64_t samples = 0;
  double tv_distance = 0.0;   // includes the unobserved Poisson tail
  double chi_square = 0.0;    // tail bins merged so expected counts >= 5
  std::int64_t chi_dof = 0;
  double chi_p_value = 1.0;
  std::vector<PoissonFitRow> table;
};

PoissonFitReport poisson_fit_test(std::span<const LESSample> samples, double lambda);
PoissonFitReport poisson_fit_from_counts(std::span<const std::int64_t> counts, double lambda);

struct EmpiricalDOS {
  std::vector<double> bin_centers;
  std::vector<double> densities;  // counts / ((2N+1) * trials * bin width)
  double bin_width = 0.0;
  std::int64_t half_size = 0;
  std::int64_t trials = 0;
};

EmpiricalDOS empirical_dos(std::span<const Spectrum> spectra, std::int64_t bins, Interval range);
// Freedman-Diaconis bin width over the pooled eigenvalues
EmpiricalDOS empirical_dos(std::span<const Spectrum> spectra);

}  // namespace rbmlab
