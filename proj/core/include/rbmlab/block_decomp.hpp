// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rbmlab/band_matrix.hpp"
#include "rbmlab/spectral_stats.hpp"

namespace rbmlab {

enum class WegnerMode { strong, weak };

// contiguous run of logical indices [lo, hi] in <-N, N>
struct BlockRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t size() const { return hi - lo + 1; }
};

// Partition of <-N, N> into blocks of 2 floor(N^beta) + 1 consecutive points
// (a short terminal block is allowed and recorded). Per block, the boundary
// is the set of points within N^alpha of the block endpoints and the
// interior the set further than N^{mu*alpha} * delta * log N from the
// boundary. Interior emptiness and the decay-scale condition
// alpha*mu < beta are recorded here and enforced by the operations that
// depend on them.
struct BlockScheme {
  std::int64_t half_size = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double mu = 2.0;
  double delta = 2.0;
  WegnerMode mode = WegnerMode::strong;

  std::vector<BlockRange> blocks;
  std::vector<std::vector<std::int64_t>> boundary;  // logical indices per block
  std::vector<std::vector<std::int64_t>> interior;

  std::int64_t block_points = 0;  // 2 floor(N^beta) + 1
  bool short_last = false;
  std::int64_t last_size = 0;
  bool delta_checked = false;  // true when a (kappa, sigma) pair was supplied

  std::int64_t count() const { return static_cast<std::int64_t>(blocks.size()); }
  bool interior_nonempty() const;
  bool decay_scales_ok() const { return alpha * mu < beta; }
};

// Validation order matches the diagnostics the CLI promises: alpha < beta,
// alpha < 1/2, beta < 1, then (weak mode) alpha + beta < 1. When kappa/sigma
// are given, delta is checked against delta > (alpha(1/8 + mu) + sigma/2)/kappa.
BlockScheme make_block_scheme(std::int64_t half_size, double alpha, double beta, double mu = 2.0,
                              double delta = 2.0, WegnerMode mode = WegnerMode::strong,
                              std::optional<std::pair<double, double>> kappa_sigma = std::nullopt);

struct BlockCounts {
  std::vector<std::int64_t> per_block;  // eta^{p,N}[I]
  std::int64_t zeta = 0;                // sum over blocks
};

// Independent-resampling mode: block p gets a fresh band matrix on its index
// range (same L, same entry law, seed derive_seed(params.seed, p+1, 0));
// counts use the physical window E0 + I/N with the *full* N scaling.
BlockCounts sample_block_counts(const BandMatrixParams& params, const BlockScheme& scheme,
                                const RescaleWindow& w);

struct CouplingReport {
  std::int64_t half_size = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::int64_t trials = 0;
  double mean_abs_diff = 0.0;  // E|xi - zeta|
  double mean_abs_diff_se = 0.0;
  double mean_diff = 0.0;      // E(xi - zeta)
  double mean_diff_se = 0.0;
  double match_rate = 0.0;     // P{xi = zeta}
  double match_rate_se = 0.0;
};

// Coupled-submatrix mode: each trial draws one full realization, blocks are
// its principal submatrices (off-block couplings dropped), and xi / zeta are
// counted on the coupled pair. Trial t uses seed derive_seed(params.seed, 0, t).
CouplingReport coupling_compare(const BandMatrixParams& params, const BlockScheme& scheme,
                                const RescaleWindow& w, std::int64_t trials);

// single coupled draw, exposed for the experiment runner
std::pair<std::int64_t, std::int64_t> coupled_counts(const BandMatrixParams& params,
                                                     const BlockScheme& scheme,
                                                     const RescaleWindow& w);

struct ResolventErrorTerms {
  double a_term = 0.0;  // boundary-shell diagonal Im G mass
  double b_term = 0.0;  // dropped-coupling cross term
};

// Diagnostics for the block approximation of Im Tr G at Im z > 0:
//   A = (2N+1)^{-1} sum_p sum_{j in block \ interior} [Im G(j,j) + Im G_p(j,j)]
//   B = (2N+1)^{-1} sum_p sum_{j in interior(p)} sum_{dropped (k,l), k in p}
//         |G_p(j,k)| |H_{kl}| |G(l,j)|
// Requires nonempty interiors (configuration error otherwise, advising a
// larger N or smaller delta).
ResolventErrorTerms resolvent_error_terms(const BandMatrix& realization,
                                          const BlockScheme& scheme, std::complex<double> z);

}  // namespace rbmlab
