// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#include "rbmlab/spectral_stats.hpp"

#include <algorithm>
#include <cmath>

#include "rbmlab/errors.hpp"
#include "rbmlab/rng.hpp"
#include "rbmlab/statistics.hpp"

namespace rbmlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kWindowMargin = 0.5;
}  // namespace

void RescaleWindow::validate(std::int64_t half_size) const {
  if (!(center_energy > -2.0 && center_energy < 2.0)) {
    throw config_error("window center energy E0 must lie in (-2, 2)");
  }
  if (half_size <= 0) throw config_error("half_size must be positive");
  const Interval phys = physical(half_size);
  if (phys.lo < -2.0 - kWindowMargin || phys.hi > 2.0 + kWindowMargin) {
    throw config_error("physical window E0 + I/N leaves (-2.5, 2.5)");
  }
}

LESSample les_count(const Spectrum& spectrum, const RescaleWindow& w) {
  const std::int64_t n = spectrum.size();
  if (n == 0) throw config_error("les_count: empty spectrum");
  const std::int64_t half_size = spectrum.params ? spectrum.params->half_size : (n - 1) / 2;
  const Interval phys = w.physical(half_size);
  const auto& ev = spectrum.eigenvalues;
  // count of eigenvalues in (lo, hi]
  const auto lo = std::upper_bound(ev.begin(), ev.end(), phys.lo);
  const auto hi = std::upper_bound(ev.begin(), ev.end(), phys.hi);
  LESSample s;
  s.window = w;
  s.half_size = half_size;
  s.count = static_cast<std::int64_t>(hi - lo);
  return s;
}

LESSample les_count(const Tridiagonal& t, std::int64_t half_size, const RescaleWindow& w) {
  const Interval phys = w.physical(half_size);
  LESSample s;
  s.window = w;
  s.half_size = half_size;
  if (phys.empty()) {
    s.count = 0;
    return s;
  }
  s.count = count_in_interval(t, phys.lo, phys.hi).count;
  return s;
}

double wegner_moment(std::span<const IntervalCount> samples) {
  if (samples.empty()) throw config_error("wegner_moment: no samples");
  double sum = 0.0;
  for (const auto& s : samples) sum += static_cast<double>(s.count);
  return sum / static_cast<double>(samples.size());
}

double minami_moment(std::span<const IntervalCount> samples) {
  if (samples.empty()) throw config_error("minami_moment: no samples");
  double sum = 0.0;
  for (const auto& s : samples) {
    sum += static_cast<double>(s.count) * static_cast<double>(s.count - 1);
  }
  return sum / static_cast<double>(samples.size());
}

IntensityEstimate intensity_from_counts(const RescaleWindow& w, std::int64_t half_size,
                                        std::span<const std::int64_t> counts) {
  std::vector<double> values(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) values[i] = static_cast<double>(counts[i]);
  const MeanStderr ms = mean_stderr(values);
  IntensityEstimate est;
  est.window = w;
  est.half_size = half_size;
  est.b_n = ms.mean;
  est.stderr_of_mean = ms.stderr_of_mean;
  est.trials = ms.count;
  return est;
}

IntensityEstimate intensity_bn(const RescaleWindow& w, const BandMatrixParams& params,
                               std::int64_t trials) {
  if (trials < 1) throw config_error("intensity_bn: trials must be >= 1");
  w.validate(params.half_size);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(trials));
  for (std::int64_t t = 0; t < trials; ++t) {
    BandMatrixParams p = params;
    p.seed = derive_seed(params.seed, 0, static_cast<std::uint64_t>(t));
    const Tridiagonal tri = reduce_to_tridiagonal(sample_band_matrix(p));
    counts[static_cast<std::size_t>(t)] = les_count(tri, params.half_size, w).count;
  }
  return intensity_from_counts(w, params.half_size, counts);
}

double intensity_integrated(const Interval& j_range, const Interval& window,
                            const BandMatrixParams& params, std::int64_t nodes,
                            std::int64_t trials) {
  j_range.require_ordered("J");
  if (nodes < 8) throw config_error("intensity_integrated: E0 grid needs >= 8 nodes");
  if (trials < 1) throw config_error("intensity_integrated: trials must be >= 1");
  if (window.empty()) return 0.0;

  std::vector<double> e0(static_cast<std::size_t>(nodes));
  const double step = j_range.length() / static_cast<double>(nodes - 1);
  for (std::int64_t i = 0; i < nodes; ++i) {
    e0[static_cast<std::size_t>(i)] = j_range.lo + step * static_cast<double>(i);
  }
  // one tridiagonal per trial serves every node: the matrix law is E0-free
  std::vector<double> b(static_cast<std::size_t>(nodes), 0.0);
  for (std::int64_t t = 0; t < trials; ++t) {
    BandMatrixParams p = params;
    p.seed = derive_seed(params.seed, 0, static_cast<std::uint64_t>(t));
    const Tridiagonal tri = reduce_to_tridiagonal(sample_band_matrix(p));
    for (std::int64_t i = 0; i < nodes; ++i) {
      RescaleWindow w{e0[static_cast<std::size_t>(i)], window};
      b[static_cast<std::size_t>(i)] +=
          static_cast<double>(les_count(tri, params.half_size, w).count);
    }
  }
  for (double& v : b) v /= static_cast<double>(trials);

  double integral = 0.0;
  for (std::int64_t i = 0; i + 1 < nodes; ++i) {
    integral += 0.5 * (b[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i + 1)]) * step;
  }
  return integral;
}

std::vector<double> default_t_grid(std::int64_t nodes) {
  std::vector<double> grid(static_cast<std::size_t>(nodes));
  for (std::int64_t i = 0; i < nodes; ++i) {
    grid[static_cast<std::size_t>(i)] =
        -kPi + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(nodes - 1);
  }
  return grid;
}

CharExponentEstimate char_exponent_from_counts(std::span<const std::int64_t> counts,
                                               std::vector<double> t_grid) {
  const std::int64_t n = static_cast<std::int64_t>(counts.size());
  if (n < 100) throw config_error("char_exponent: needs >= 100 samples");
  if (t_grid.empty()) t_grid = default_t_grid();

  // histogram of integer counts; the ecf is a weighted sum of unit phases
  std::int64_t kmax = 0;
  for (auto c : counts) kmax = std::max(kmax, c);
  std::vector<double> p(static_cast<std::size_t>(kmax + 1), 0.0);
  for (auto c : counts) p[static_cast<std::size_t>(c)] += 1.0;
  for (double& v : p) v /= static_cast<double>(n);

  CharExponentEstimate est;
  est.trials = n;
  est.t_grid = std::move(t_grid);
  est.psi.resize(est.t_grid.size());
  est.psi_stderr.resize(est.t_grid.size());
  est.valid.resize(est.t_grid.size());

  bool any_valid = false;
  for (std::size_t ti = 0; ti < est.t_grid.size(); ++ti) {
    const double t = est.t_grid[ti];
    double re = 0.0, im = 0.0, re2 = 0.0, im2 = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] == 0.0) continue;
      const double ct = std::cos(t * static_cast<double>(k));
      const double st = std::sin(t * static_cast<double>(k));
      re += p[k] * ct;
      im += p[k] * st;
      re2 += p[k] * ct * ct;
      im2 += p[k] * st * st;
    }
    const double var_re = std::max(0.0, re2 - re * re);
    const double var_im = std::max(0.0, im2 - im * im);
    const double se = std::sqrt((var_re + var_im) / static_cast<double>(n));
    const std::complex<double> phi(re, im);
    const double mod = std::abs(phi);
    const bool ok = mod >= 10.0 * se;
    est.valid[ti] = ok;
    any_valid = any_valid || ok;
    est.psi[ti] = (mod > 0.0) ? std::log(phi) : std::complex<double>(0.0, 0.0);
    est.psi_stderr[ti] = mod > 0.0 ? se / mod : 0.0;
  }
  if (!any_valid) {
    throw numerical_error("char_exponent: empirical characteristic function drowned in noise");
  }
  return est;
}

CharExponentEstimate char_exponent(std::span<const LESSample> samples,
                                   std::vector<double> t_grid) {
  std::vector<std::int64_t> counts(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) counts[i] = samples[i].count;
  return char_exponent_from_counts(counts, std::move(t_grid));
}

double gap_ratio_statistic(std::span<const double> sorted_eigenvalues, double center_energy,
                           double halfwidth) {
  const double lo = center_energy - halfwidth;
  const double hi = center_energy + halfwidth;
  const auto begin = std::lower_bound(sorted_eigenvalues.begin(), sorted_eigenvalues.end(), lo);
  const auto end = std::upper_bound(sorted_eigenvalues.begin(), sorted_eigenvalues.end(), hi);
  const std::int64_t m = static_cast<std::int64_t>(end - begin);
  if (m < 3) {
    throw config_error("gap_ratio_statistic: window holds fewer than 3 eigenvalues");
  }
  double sum = 0.0;
  std::int64_t terms = 0;
  for (auto it = begin; it + 2 < end; ++it) {
    const double g1 = *(it + 1) - *it;
    const double g2 = *(it + 2) - *(it + 1);
    const double mx = std::max(g1, g2);
    sum += (mx > 0.0) ? std::min(g1, g2) / mx : 1.0;  // coincident pair: ratio 1
    ++terms;
  }
  return sum / static_cast<double>(terms);
}

double gap_ratio_statistic(const Spectrum& spectrum, double center_energy, double halfwidth) {
  return gap_ratio_statistic(std::span<const double>(spectrum.eigenvalues), center_energy,
                             halfwidth);
}

PoissonFitReport poisson_fit_from_counts(std::span<const std::int64_t> counts, double lambda) {
  if (lambda <= 0.0) throw config_error("poisson_fit_test: lambda must be > 0");
  if (counts.empty()) throw config_error("poisson_fit_test: no samples");
  const std::int64_t n = static_cast<std::int64_t>(counts.size());

  std::int64_t kmax = 0;
  for (auto c : counts) kmax = std::max(kmax, c);
  std::vector<std::int64_t> observed(static_cast<std::size_t>(kmax + 1), 0);
  for (auto c : counts) ++observed[static_cast<std::size_t>(c)];

  PoissonFitReport report;
  report.lambda = lambda;
  report.samples = n;

  double tail = 1.0;  // Poisson mass beyond kmax
  for (std::int64_t k = 0; k <= kmax; ++k) {
    const double pk = poisson_pmf(lambda, k);
    tail -= pk;
    const double expected = pk * static_cast<double>(n);
    report.table.push_back({k, observed[static_cast<std::size_t>(k)], expected});
    report.tv_distance +=
        std::abs(static_cast<double>(observed[static_cast<std::size_t>(k)]) /
                     static_cast<double>(n) -
                 pk);
  }
  tail = std::max(0.0, tail);
  report.tv_distance = 0.5 * (report.tv_distance + tail);

  // chi-square with tail bins merged until expected >= 5
  double chi = 0.0;
  std::int64_t bins = 0;
  double acc_exp = 0.0;
  double acc_obs = 0.0;
  for (std::int64_t k = 0; k <= kmax; ++k) {
    acc_exp += poisson_pmf(lambda, k) * static_cast<double>(n);
    acc_obs += static_cast<double>(observed[static_cast<std::size_t>(k)]);
    if (acc_exp >= 5.0) {
      chi += (acc_obs - acc_exp) * (acc_obs - acc_exp) / acc_exp;
      ++bins;
      acc_exp = 0.0;
      acc_obs = 0.0;
    }
  }
  // whatever remains, plus the unobserved tail
  acc_exp += tail * static_cast<double>(n);
  if (acc_exp > 0.0) {
    chi += (acc_obs - acc_exp) * (acc_obs - acc_exp) / acc_exp;
    ++bins;
  }
  report.chi_square = chi;
  report.chi_dof = std::max<std::int64_t>(1, bins - 1);
  report.chi_p_value = gamma_q(static_cast<double>(report.chi_dof) / 2.0, chi / 2.0);
  return report;
}

PoissonFitReport poisson_fit_test(std::span<const LESSample> samples, double lambda) {
  std::vector<std::int64_t> counts(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) counts[i] = samples[i].count;
  return poisson_fit_from_counts(counts, lambda);
}

EmpiricalDOS empirical_dos(std::span<const Spectrum> spectra, std::int64_t bins, Interval range) {
  if (spectra.empty()) throw config_error("empirical_dos: no spectra");
  if (bins < 1) throw config_error("empirical_dos: need >= 1 bin");
  range.require_ordered("histogram range");

  EmpiricalDOS dos;
  dos.trials = static_cast<std::int64_t>(spectra.size());
  dos.half_size = spectra[0].params ? spectra[0].params->half_size
                                    : (spectra[0].size() - 1) / 2;
  dos.bin_width = range.length() / static_cast<double>(bins);
  dos.bin_centers.resize(static_cast<std::size_t>(bins));
  dos.densities.assign(static_cast<std::size_t>(bins), 0.0);
  for (std::int64_t b = 0; b < bins; ++b) {
    dos.bin_centers[static_cast<std::size_t>(b)] =
        range.lo + dos.bin_width * (static_cast<double>(b) + 0.5);
  }
  const std::int64_t dim = 2 * dos.half_size + 1;
  for (const auto& s : spectra) {
    for (double ev : s.eigenvalues) {
      if (ev <= range.lo || ev > range.hi) continue;
      auto b = static_cast<std::int64_t>(std::floor((ev - range.lo) / dos.bin_width));
      b = std::clamp<std::int64_t>(b, 0, bins - 1);
      dos.densities[static_cast<std::size_t>(b)] += 1.0;
    }
  }
  const double norm =
      static_cast<double>(dim) * static_cast<double>(dos.trials) * dos.bin_width;
  for (double& d : dos.densities) d /= norm;
  return dos;
}

EmpiricalDOS empirical_dos(std::span<const Spectrum> spectra) {
  if (spectra.empty()) throw config_error("empirical_dos: no spectra");
  std::vector<double> pooled;
  for (const auto& s : spectra) {
    pooled.insert(pooled.end(), s.eigenvalues.begin(), s.eigenvalues.end());
  }
  std::sort(pooled.begin(), pooled.end());
  const std::size_t m = pooled.size();
  const double q1 = pooled[m / 4];
  const double q3 = pooled[(3 * m) / 4];
  const double iqr = std::max(q3 - q1, 1e-12);
  const double width = 2.0 * iqr / std::cbrt(static_cast<double>(m));
  const double lo = pooled.front();
  const double hi = pooled.back();
  const double pad = 0.5 * width;
  const auto bins = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::ceil((hi - lo + 2.0 * pad) / width)));
  return empirical_dos(spectra, bins,
                       Interval{lo - pad, lo - pad + static_cast<double>(bins) * width});
}

}  // namespace rbmlab
