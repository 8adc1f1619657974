// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace rbmlab {

// Counter-based generator: every draw is a pure function of (seed, counter),
// so trial streams are order-independent and bit-portable. Matrix sampling,
// seed derivation and all Monte Carlo draws go through this engine; nothing
// in the library uses <random> engines or distributions.
inline constexpr std::uint64_t kGolden64 = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer (Steele/Lea/Flood mixing constants).
inline std::uint64_t avalanche64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return avalanche64(state_ += kGolden64); }

  // 53-bit mantissa draws; [0,1) and (0,1] variants.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform_open0() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Stream derivation rule (documented in the README, relied on by the
// reproducibility contract):
//   h = avalanche64(master + kGolden64 * (lane + 1))
//   h = avalanche64(h      + kGolden64 * (index + 1))
// Experiments use (master_seed, grid_index, trial_index); block matrices use
// (matrix_seed, block_index + 1, 0); retries use (trial_seed, 0, attempt).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t lane, std::uint64_t index) {
  std::uint64_t h = avalanche64(master + kGolden64 * (lane + 1));
  return avalanche64(h + kGolden64 * (index + 1));
}

// Box-Muller without rejection or ziggurat tables, so the draw sequence is
// reproducible from the uniform stream alone:
//   u1 in (0,1], u2 in [0,1)
//   r = sqrt(-2 ln u1);  first = r cos(2 pi u2), cached = r sin(2 pi u2)
// Exactly one pair of uniforms is consumed per two normals.
class GaussianSampler {
 public:
  double operator()(SplitMix64& rng) {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = rng.uniform_open0();
    const double u2 = rng.uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  void reset() { has_spare_ = false; }

 private:
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rbmlab
