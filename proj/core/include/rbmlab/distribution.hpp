// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rbmlab/rng.hpp"

namespace rbmlab {

enum class EntryKind : std::uint8_t {
  gaussian = 0,        // standard normal
  uniform_scaled = 1,  // uniform on [-sqrt(3), sqrt(3))
  rademacher = 2,      // +/-1 with probability 1/2
  custom_density = 3,  // piecewise-constant density, affinely standardized
};

const char* to_string(EntryKind kind);
EntryKind entry_kind_from_string(const std::string& name);

// Entry law for the i.i.d. band entries. Every supported kind has mean 0,
// variance 1 and finite moments of every order; custom densities are
// piecewise constant on a compact support and standardized affinely from
// their exact first two moments.
class EntryDistribution {
 public:
  static EntryDistribution gaussian();
  static EntryDistribution uniform_scaled();
  static EntryDistribution rademacher();
  // parameters: support [lo, hi] split into weights.size() equal bins with
  // the given nonnegative weights (not all zero).
  static EntryDistribution custom_density(double lo, double hi, std::vector<double> weights);

  static EntryDistribution from_tag(std::uint8_t tag, std::vector<double> parameters);

  EntryKind kind() const { return kind_; }
  std::uint8_t tag() const { return static_cast<std::uint8_t>(kind_); }
  const std::vector<double>& parameters() const { return parameters_; }

  double mean() const { return 0.0; }
  double variance() const { return 1.0; }

  // Stateless per-draw sampler; gaussian draws consume uniforms in pairs via
  // the caller-owned GaussianSampler cache.
  class Sampler {
   public:
    explicit Sampler(const EntryDistribution& dist);
    double draw(SplitMix64& rng);

   private:
    const EntryDistribution* dist_;
    GaussianSampler gauss_;
  };

  Sampler make_sampler() const { return Sampler(*this); }

  bool operator==(const EntryDistribution& other) const {
    return kind_ == other.kind_ && parameters_ == other.parameters_;
  }

 private:
  EntryDistribution(EntryKind kind, std::vector<double> parameters);
  double draw_custom(double u) const;  // inverse CDF of the standardized density

  EntryKind kind_;
  std::vector<double> parameters_;
  // custom-density tables (empty otherwise)
  std::vector<double> cdf_;      // cumulative bin probabilities
  double bin_width_ = 0.0;
  double raw_lo_ = 0.0;
  double shift_ = 0.0;           // standardization: x -> (x - shift)/scale
  double scale_ = 1.0;

  friend class Sampler;
};

}  // namespace rbmlab
