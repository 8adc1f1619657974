// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "rbmlab/distribution.hpp"
#include "rbmlab/interval.hpp"

namespace rbmlab {

// Parameters of one ensemble draw. The matrix has dimension 2N+1 with logical
// indices -N..N; the band half-width is L (band width W = 2L+1) and every
// in-band entry is an i.i.d. sample scaled by 1/sqrt(2L+1).
struct BandMatrixParams {
  std::int64_t half_size = 0;       // N
  double alpha = 0.0;               // band exponent
  std::int64_t band_halfwidth = 0;  // L
  bool periodic = false;
  EntryDistribution distribution = EntryDistribution::gaussian();
  std::uint64_t seed = 0;

  // L = floor(N^alpha)
  static BandMatrixParams from_alpha(std::int64_t half_size, double alpha,
                                     EntryDistribution distribution = EntryDistribution::gaussian(),
                                     std::uint64_t seed = 0, bool periodic = false);
  // alpha recorded as log L / log N (0 when L <= 1)
  static BandMatrixParams from_halfwidth(std::int64_t half_size, std::int64_t band_halfwidth,
                                         EntryDistribution distribution = EntryDistribution::gaussian(),
                                         std::uint64_t seed = 0, bool periodic = false);

  std::int64_t dim() const { return 2 * half_size + 1; }
  std::int64_t band_width() const { return 2 * band_halfwidth + 1; }
  void validate() const;
};

std::int64_t band_halfwidth_for(std::int64_t half_size, double alpha);

// Symmetric banded storage: the L+1 lower diagonals, diagonal-major.
//   non-periodic: bands[d*dim + i] = A(i, i-d)            (i >= d; else padding 0)
//   periodic:     bands[d*dim + i] = A(i, (i-d) mod dim)
// Each unordered index pair is stored exactly once and mirrored on read.
struct BandStorage {
  std::int64_t dim = 0;
  std::int64_t halfwidth = 0;
  bool periodic = false;
  std::vector<double> bands;

  BandStorage() = default;
  BandStorage(std::int64_t dim_, std::int64_t halfwidth_, bool periodic_)
      : dim(dim_), halfwidth(halfwidth_), periodic(periodic_),
        bands(static_cast<std::size_t>((halfwidth_ + 1) * dim_), 0.0) {}

  double& slot(std::int64_t d, std::int64_t i) {
    return bands[static_cast<std::size_t>(d * dim + i)];
  }
  double slot(std::int64_t d, std::int64_t i) const {
    return bands[static_cast<std::size_t>(d * dim + i)];
  }

  // |i-j|, or the cyclic distance when periodic
  std::int64_t band_distance(std::int64_t i, std::int64_t j) const;
  double entry(std::int64_t i, std::int64_t j) const;  // 0-based, mirrored read

  // y = A x for real x (used by tests and matvec residual checks)
  std::vector<double> multiply(const std::vector<double>& x) const;
};

// Gershgorin enclosure [min_i (a_ii - r_i), max_i (a_ii + r_i)]
Interval gershgorin_interval(const BandStorage& m);

class BandMatrix {
 public:
  BandMatrix(BandMatrixParams params, BandStorage storage)
      : params_(std::move(params)), storage_(std::move(storage)) {}

  const BandMatrixParams& params() const { return params_; }
  const BandStorage& storage() const { return storage_; }
  std::int64_t dim() const { return storage_.dim; }

  double entry(std::int64_t i, std::int64_t j) const { return storage_.entry(i, j); }
  // logical indices in -N..N
  double entry_logical(std::int64_t i, std::int64_t j) const {
    return storage_.entry(i + params_.half_size, j + params_.half_size);
  }

 private:
  BandMatrixParams params_;
  BandStorage storage_;
};

// Draw order (fixed, part of the reproducibility contract): rows i = 0..dim-1
// ascending; within a row, offsets d = min(L, i)..0 descending (columns
// ascending) for the non-periodic case, d = L..0 descending when periodic.
// The generator is SplitMix64 seeded with `seed`; gaussian entries use the
// cached Box-Muller pair in rng.hpp.
BandStorage sample_banded(std::int64_t dim, std::int64_t halfwidth, bool periodic,
                          const EntryDistribution& distribution, std::uint64_t seed);

BandMatrix sample_band_matrix(const BandMatrixParams& params);

// Nominal per-row variance sums: (#in-band columns in row i) / (2L+1).
std::vector<double> row_variance_profile(const BandMatrix& m);

// Principal submatrix on rows/columns [lo, lo+len); couplings leaving the
// range (including periodic wrap-around) are dropped. Result is non-periodic.
BandStorage principal_submatrix(const BandStorage& m, std::int64_t lo, std::int64_t len);

// Little-endian binary layout (debug serialization), documented in README:
//   magic "RBM1", u32 version=1, u64 N, u64 L, u8 periodic, u8 dist tag,
//   u16 pad=0, u32 #params, f64 params..., u64 seed,
//   f64 band data, diagonal-major (L+1 diagonals of length 2N+1).
void write_band_matrix(const BandMatrix& m, const std::filesystem::path& path);
BandMatrix read_band_matrix(const std::filesystem::path& path);

}  // namespace rbmlab
