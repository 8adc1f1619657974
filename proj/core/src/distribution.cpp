// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#include "rbmlab/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rbmlab/errors.hpp"

namespace rbmlab {

const char* to_string(EntryKind kind) {
  switch (kind) {
    case EntryKind::gaussian: return "gaussian";
    case EntryKind::uniform_scaled: return "uniform";
    case EntryKind::rademacher: return "rademacher";
    case EntryKind::custom_density: return "custom-density";
  }
  return "unknown";
}

EntryKind entry_kind_from_string(const std::string& name) {
  if (name == "gaussian" || name == "standard-gaussian") return EntryKind::gaussian;
  if (name == "uniform" || name == "uniform-scaled") return EntryKind::uniform_scaled;
  if (name == "rademacher") return EntryKind::rademacher;
  if (name == "custom-density" || name == "custom") return EntryKind::custom_density;
  throw config_error("unknown entry distribution: " + name);
}

EntryDistribution::EntryDistribution(EntryKind kind, std::vector<double> parameters)
    : kind_(kind), parameters_(std::move(parameters)) {
  if (kind_ != EntryKind::custom_density) return;

  if (parameters_.size() < 3) {
    throw config_error("custom-density needs parameters [lo, hi, w_1, ..., w_k]");
  }
  raw_lo_ = parameters_[0];
  const double raw_hi = parameters_[1];
  if (!(raw_lo_ < raw_hi)) throw config_error("custom-density: lo must be < hi");
  const std::size_t k = parameters_.size() - 2;
  std::vector<double> w(parameters_.begin() + 2, parameters_.end());
  double total = 0.0;
  for (double wi : w) {
    if (wi < 0.0 || !std::isfinite(wi)) throw config_error("custom-density: weights must be >= 0");
    total += wi;
  }
  if (total <= 0.0) throw config_error("custom-density: weights must not all vanish");

  bin_width_ = (raw_hi - raw_lo_) / static_cast<double>(k);
  cdf_.resize(k);
  double acc = 0.0;
  // Exact raw moments of the piecewise-constant density, then affine
  // standardization to mean 0, variance 1.
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double p = w[i] / total;
    acc += p;
    cdf_[i] = acc;
    const double a = raw_lo_ + bin_width_ * static_cast<double>(i);
    const double b = a + bin_width_;
    m1 += p * 0.5 * (a + b);
    m2 += p * (a * a + a * b + b * b) / 3.0;
  }
  cdf_.back() = 1.0;
  const double var = m2 - m1 * m1;
  if (var <= 0.0) throw config_error("custom-density: degenerate density (zero variance)");
  shift_ = m1;
  scale_ = std::sqrt(var);
}

EntryDistribution EntryDistribution::gaussian() {
  return EntryDistribution(EntryKind::gaussian, {});
}
EntryDistribution EntryDistribution::uniform_scaled() {
  return EntryDistribution(EntryKind::uniform_scaled, {});
}
EntryDistribution EntryDistribution::rademacher() {
  return EntryDistribution(EntryKind::rademacher, {});
}
EntryDistribution EntryDistribution::custom_density(double lo, double hi,
                                                    std::vector<double> weights) {
  std::vector<double> params;
  params.reserve(weights.size() + 2);
  params.push_back(lo);
  params.push_back(hi);
  params.insert(params.end(), weights.begin(), weights.end());
  return EntryDistribution(EntryKind::custom_density, std::move(params));
}

EntryDistribution EntryDistribution::from_tag(std::uint8_t tag, std::vector<double> parameters) {
  switch (tag) {
    case 0: return gaussian();
    case 1: return uniform_scaled();
    case 2: return rademacher();
    case 3: return EntryDistribution(EntryKind::custom_density, std::move(parameters));
    default: throw config_error("unknown entry distribution tag");
  }
}

double EntryDistribution::draw_custom(double u) const {
  // Inverse CDF: locate the bin, interpolate linearly inside it.
  const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  const std::size_t i = static_cast<std::size_t>(it - cdf_.begin());
  const double prev = (i == 0) ? 0.0 : cdf_[i - 1];
  const double p = cdf_[i] - prev;
  const double frac = (p > 0.0) ? (u - prev) / p : 0.0;
  const double x = raw_lo_ + bin_width_ * (static_cast<double>(i) + frac);
  return (x - shift_) / scale_;
}

EntryDistribution::Sampler::Sampler(const EntryDistribution& dist) : dist_(&dist) {}

double EntryDistribution::Sampler::draw(SplitMix64& rng) {
  switch (dist_->kind_) {
    case EntryKind::gaussian:
      return gauss_(rng);
    case EntryKind::uniform_scaled:
      // one uniform per draw: (2u-1)*sqrt(3), u in [0,1)
      return (2.0 * rng.uniform01() - 1.0) * 1.7320508075688772;
    case EntryKind::rademacher:
      return rng.uniform01() < 0.5 ? -1.0 : 1.0;
    case EntryKind::custom_density:
      return dist_->draw_custom(rng.uniform01());
  }
  return 0.0;
}

}  // namespace rbmlab
