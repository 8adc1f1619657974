// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#include "rbmlab/localization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rbmlab/errors.hpp"
#include "rbmlab/rng.hpp"
#include "rbmlab/statistics.hpp"

namespace rbmlab {

std::vector<std::complex<double>> greens_column(const BandMatrix& m, std::int64_t j,
                                                std::complex<double> z) {
  ResolventSolver solver(m.storage(), z);
  return solver.column(j);
}

namespace {

double estimate_moment(std::vector<double>& values, bool median_of_means, std::int64_t groups,
                       double* stderr_out) {
  const auto n = static_cast<std::int64_t>(values.size());
  if (!median_of_means || groups < 2 || n < 2 * groups) {
    const auto ms = mean_stderr(values);
    *stderr_out = ms.stderr_of_mean;
    return ms.mean;
  }
  std::vector<double> group_means;
  group_means.reserve(static_cast<std::size_t>(groups));
  const std::int64_t per = n / groups;
  for (std::int64_t g = 0; g < groups; ++g) {
    double sum = 0.0;
    for (std::int64_t i = g * per; i < (g + 1) * per; ++i) {
      sum += values[static_cast<std::size_t>(i)];
    }
    group_means.push_back(sum / static_cast<double>(per));
  }
  std::sort(group_means.begin(), group_means.end());
  const auto gm = mean_stderr(group_means);
  *stderr_out = gm.stderr_of_mean;
  const std::size_t mid = group_means.size() / 2;
  return (group_means.size() % 2 == 1)
             ? group_means[mid]
             : 0.5 * (group_means[mid - 1] + group_means[mid]);
}

}  // namespace

DecayFit fractional_moment_decay(const BandMatrixParams& params, std::complex<double> z, double s,
                                 std::int64_t probe_row, const std::vector<std::int64_t>& distances,
                                 const DecayOptions& options) {
  if (!(s > 0.0 && s < 1.0)) throw config_error("fractional moment: s must lie in (0, 1)");
  if (!(z.imag() > 0.0)) throw config_error("fractional moment: Im z must be > 0");
  if (distances.empty()) throw config_error("fractional moment: empty distance grid");
  if (options.trials < 2) throw config_error("fractional moment: needs >= 2 trials");

  const std::int64_t N = params.half_size;
  std::int64_t dmax = 0;
  for (auto d : distances) {
    if (d < 0) throw config_error("fractional moment: distances must be >= 0");
    dmax = std::max(dmax, d);
  }
  if (probe_row - dmax < -N || probe_row + dmax > N) {
    throw config_error("fractional moment: probe row too close to the edge for the grid");
  }
  const std::int64_t j0 = probe_row + N;  // 0-based

  const std::size_t nd = distances.size();
  std::vector<std::vector<double>> samples(nd);
  for (auto& v : samples) v.reserve(static_cast<std::size_t>(options.trials));

  for (std::int64_t t = 0; t < options.trials; ++t) {
    BandMatrixParams p = params;
    p.seed = derive_seed(params.seed, 0, static_cast<std::uint64_t>(t));
    const BandMatrix m = sample_band_matrix(p);
    ResolventSolver solver(m.storage(), z);
    const auto col = solver.column(j0);
    for (std::size_t i = 0; i < nd; ++i) {
      const std::int64_t k0 = j0 + distances[i];
      samples[i].push_back(std::pow(std::abs(col[static_cast<std::size_t>(k0)]), s));
    }
  }

  DecayFit fit;
  fit.distances = distances;
  fit.log_moments.resize(nd);
  fit.moment_stderr.resize(nd);

  std::vector<double> moments(nd);
  for (std::size_t i = 0; i < nd; ++i) {
    double se = 0.0;
    moments[i] = estimate_moment(samples[i], options.median_of_means, options.mom_groups, &se);
    fit.moment_stderr[i] = se;
    fit.log_moments[i] =
        moments[i] > 0.0 ? std::log(moments[i]) : std::numeric_limits<double>::quiet_NaN();
  }

  // tail fit beyond twice the band width
  const std::int64_t tail_from = 2 * params.band_width();
  std::vector<double> xs, ys, ws;
  bool any_tail = false;
  for (std::size_t i = 0; i < nd; ++i) {
    if (distances[i] <= tail_from) continue;
    any_tail = true;
    if (!(moments[i] > 0.0)) continue;
    xs.push_back(static_cast<double>(distances[i]));
    ys.push_back(fit.log_moments[i]);
    // delta method: var(log m) = var(m)/m^2
    const double rel = fit.moment_stderr[i] > 0.0 ? moments[i] / fit.moment_stderr[i] : 1.0;
    ws.push_back(rel * rel);
  }
  fit.tail_points = static_cast<std::int64_t>(xs.size());

  if (any_tail && xs.empty()) {
    // every tail moment vanished: decay beyond numerical support
    fit.status = DecayFitStatus::all_zero;
    fit.rate = std::numeric_limits<double>::infinity();
    fit.loc_length = 0.0;
    fit.r_squared = 1.0;
    fit.prefactor_exponent = std::numeric_limits<double>::quiet_NaN();
    return fit;
  }
  if (xs.size() < 2) {
    throw config_error("fractional moment: distance grid leaves < 2 usable tail points");
  }

  const LineFit line = fit_weighted_line(xs, ys, ws);
  fit.rate = -line.slope;
  fit.r_squared = line.r_squared;
  if (fit.rate > 0.0) {
    fit.status = DecayFitStatus::ok;
    fit.loc_length = 1.0 / fit.rate;
  } else {
    fit.status = DecayFitStatus::delocalized;
    fit.loc_length = std::numeric_limits<double>::infinity();
  }
  if (params.alpha > 0.0 && N > 1) {
    fit.prefactor_exponent =
        line.intercept / (s * params.alpha * std::log(static_cast<double>(N)));
  } else {
    fit.prefactor_exponent = std::numeric_limits<double>::quiet_NaN();
  }
  return fit;
}

double kappa_ratio(double loc_length, std::int64_t half_size) {
  if (!(loc_length > 0.0)) throw config_error("kappa_ratio: loc_length must be > 0");
  if (half_size <= 0) throw config_error("kappa_ratio: N must be > 0");
  return loc_length / static_cast<double>(half_size);
}

}  // namespace rbmlab
