// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#include "rbmlab/block_decomp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rbmlab/banded_lu.hpp"
#include "rbmlab/errors.hpp"
#include "rbmlab/rng.hpp"
#include "rbmlab/statistics.hpp"

namespace rbmlab {

bool BlockScheme::interior_nonempty() const {
  for (const auto& block_interior : interior) {
    if (block_interior.empty()) return false;
  }
  return !interior.empty();
}

BlockScheme make_block_scheme(std::int64_t half_size, double alpha, double beta, double mu,
                              double delta, WegnerMode mode,
                              std::optional<std::pair<double, double>> kappa_sigma) {
  if (half_size < 1) throw config_error("block scheme: N must be >= 1");
  if (!(alpha < beta)) throw config_error("alpha must be < beta");
  if (!(alpha >= 0.0)) throw config_error("alpha must be >= 0");
  if (!(alpha < 0.5)) throw config_error("alpha must be < 1/2");
  if (!(beta < 1.0)) throw config_error("beta must be < 1");
  if (mode == WegnerMode::weak && !(alpha + beta < 1.0)) {
    throw config_error("alpha+beta must be < 1 in weak mode");
  }
  if (!(mu >= 0.0)) throw config_error("mu must be >= 0");
  if (!(delta > 0.0)) throw config_error("delta must be > 0");

  BlockScheme scheme;
  scheme.half_size = half_size;
  scheme.alpha = alpha;
  scheme.beta = beta;
  scheme.mu = mu;
  scheme.delta = delta;
  scheme.mode = mode;

  if (kappa_sigma) {
    const auto [kappa, sigma] = *kappa_sigma;
    if (!(kappa > 0.0)) throw config_error("kappa must be > 0");
    const double bound = (alpha * (0.125 + mu) + sigma / 2.0) / kappa;
    if (!(delta > bound)) {
      throw config_error("delta must exceed (alpha*(1/8+mu)+sigma/2)/kappa");
    }
    scheme.delta_checked = true;
  }

  const double nf = static_cast<double>(half_size);
  const auto nbeta_floor = static_cast<std::int64_t>(std::floor(std::pow(nf, beta)));
  scheme.block_points = 2 * nbeta_floor + 1;

  const double boundary_reach = std::pow(nf, alpha);                      // N^alpha
  const double interior_gap = std::pow(nf, mu * alpha) * delta * std::log(nf);

  for (std::int64_t lo = -half_size; lo <= half_size; lo += scheme.block_points) {
    BlockRange range{lo, std::min(half_size, lo + scheme.block_points - 1)};
    scheme.blocks.push_back(range);

    std::vector<std::int64_t> bdry;
    std::vector<std::int64_t> intr;
    for (std::int64_t j = range.lo; j <= range.hi; ++j) {
      const auto to_edge = static_cast<double>(std::min(j - range.lo, range.hi - j));
      if (to_edge <= boundary_reach) bdry.push_back(j);
    }
    for (std::int64_t j = range.lo; j <= range.hi; ++j) {
      double dist = std::numeric_limits<double>::infinity();
      for (std::int64_t b : bdry) {
        dist = std::min(dist, static_cast<double>(std::abs(j - b)));
      }
      if (dist > interior_gap) intr.push_back(j);
    }
    scheme.boundary.push_back(std::move(bdry));
    scheme.interior.push_back(std::move(intr));
  }

  scheme.last_size = scheme.blocks.back().size();
  scheme.short_last = scheme.last_size != scheme.block_points;
  return scheme;
}

BlockCounts sample_block_counts(const BandMatrixParams& params, const BlockScheme& scheme,
                                const RescaleWindow& w) {
  if (params.half_size != scheme.half_size) {
    throw config_error("block counts: params and scheme disagree on N");
  }
  w.validate(params.half_size);
  BlockCounts out;
  out.per_block.reserve(scheme.blocks.size());
  for (std::size_t p = 0; p < scheme.blocks.size(); ++p) {
    const std::int64_t len = scheme.blocks[p].size();
    if (len < params.band_width()) {
      throw config_error("block counts: block shorter than band width W");
    }
    const std::uint64_t seed = derive_seed(params.seed, static_cast<std::uint64_t>(p + 1), 0);
    const BandStorage block =
        sample_banded(len, params.band_halfwidth, false, params.distribution, seed);
    const Tridiagonal tri = reduce_to_tridiagonal(block);
    const Interval phys = w.physical(params.half_size);
    const std::int64_t eta = phys.empty() ? 0 : count_in_interval(tri, phys.lo, phys.hi).count;
    out.per_block.push_back(eta);
    out.zeta += eta;
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> coupled_counts(const BandMatrixParams& params,
                                                     const BlockScheme& scheme,
                                                     const RescaleWindow& w) {
  const BandMatrix full = sample_band_matrix(params);
  const Interval phys = w.physical(params.half_size);
  const Tridiagonal tri_full = reduce_to_tridiagonal(full);
  const std::int64_t xi =
      phys.empty() ? 0 : count_in_interval(tri_full, phys.lo, phys.hi).count;

  std::int64_t zeta = 0;
  for (const auto& range : scheme.blocks) {
    const BandStorage sub =
        principal_submatrix(full.storage(), range.lo + params.half_size, range.size());
    const Tridiagonal tri = reduce_to_tridiagonal(sub);
    zeta += phys.empty() ? 0 : count_in_interval(tri, phys.lo, phys.hi).count;
  }
  return {xi, zeta};
}

CouplingReport coupling_compare(const BandMatrixParams& params, const BlockScheme& scheme,
                                const RescaleWindow& w, std::int64_t trials) {
  if (trials < 100) throw config_error("coupling_compare: trials must be >= 100");
  if (params.half_size != scheme.half_size) {
    throw config_error("coupling_compare: params and scheme disagree on N");
  }
  w.validate(params.half_size);

  std::vector<double> abs_diff(static_cast<std::size_t>(trials));
  std::vector<double> diff(static_cast<std::size_t>(trials));
  std::vector<double> match(static_cast<std::size_t>(trials));
  for (std::int64_t t = 0; t < trials; ++t) {
    BandMatrixParams p = params;
    p.seed = derive_seed(params.seed, 0, static_cast<std::uint64_t>(t));
    const auto [xi, zeta] = coupled_counts(p, scheme, w);
    abs_diff[static_cast<std::size_t>(t)] = static_cast<double>(std::abs(xi - zeta));
    diff[static_cast<std::size_t>(t)] = static_cast<double>(xi - zeta);
    match[static_cast<std::size_t>(t)] = (xi == zeta) ? 1.0 : 0.0;
  }

  CouplingReport report;
  report.half_size = params.half_size;
  report.alpha = params.alpha;
  report.beta = scheme.beta;
  report.trials = trials;
  const auto a = mean_stderr(abs_diff);
  const auto d = mean_stderr(diff);
  const auto m = mean_stderr(match);
  report.mean_abs_diff = a.mean;
  report.mean_abs_diff_se = a.stderr_of_mean;
  report.mean_diff = d.mean;
  report.mean_diff_se = d.stderr_of_mean;
  report.match_rate = m.mean;
  report.match_rate_se = m.stderr_of_mean;
  return report;
}

ResolventErrorTerms resolvent_error_terms(const BandMatrix& realization,
                                          const BlockScheme& scheme, std::complex<double> z) {
  if (!(z.imag() > 0.0)) throw config_error("resolvent error terms: Im z must be > 0");
  if (realization.params().half_size != scheme.half_size) {
    throw config_error("resolvent error terms: realization and scheme disagree on N");
  }
  if (!scheme.interior_nonempty()) {
    throw config_error(
        "resolvent error terms: empty block interior; increase N or decrease delta");
  }
  if (!scheme.decay_scales_ok()) {
    throw config_error("resolvent error terms: alpha*mu must be < beta");
  }

  const std::int64_t N = scheme.half_size;
  const std::int64_t dim = realization.dim();
  const std::int64_t L = realization.params().band_halfwidth;
  const auto& storage = realization.storage();

  ResolventSolver full(storage, z);
  // cache full-resolvent columns on demand (keyed by 0-based index)
  std::vector<std::vector<std::complex<double>>> full_cols(static_cast<std::size_t>(dim));
  std::vector<bool> have_col(static_cast<std::size_t>(dim), false);
  auto full_column = [&](std::int64_t c) -> const std::vector<std::complex<double>>& {
    if (!have_col[static_cast<std::size_t>(c)]) {
      full_cols[static_cast<std::size_t>(c)] = full.column(c);
      have_col[static_cast<std::size_t>(c)] = true;
    }
    return full_cols[static_cast<std::size_t>(c)];
  };

  double a_term = 0.0;
  double b_term = 0.0;

  for (std::size_t p = 0; p < scheme.blocks.size(); ++p) {
    const BlockRange range = scheme.blocks[p];
    const std::int64_t lo0 = range.lo + N;  // 0-based block start
    const BandStorage sub = principal_submatrix(storage, lo0, range.size());
    ResolventSolver block(sub, z);
    std::vector<std::vector<std::complex<double>>> block_cols(
        static_cast<std::size_t>(range.size()));
    std::vector<bool> have_block(static_cast<std::size_t>(range.size()), false);
    auto block_column = [&](std::int64_t c) -> const std::vector<std::complex<double>>& {
      if (!have_block[static_cast<std::size_t>(c)]) {
        block_cols[static_cast<std::size_t>(c)] = block.column(c);
        have_block[static_cast<std::size_t>(c)] = true;
      }
      return block_cols[static_cast<std::size_t>(c)];
    };

    // shell = block minus interior
    const auto& intr = scheme.interior[p];
    for (std::int64_t j = range.lo; j <= range.hi; ++j) {
      if (std::binary_search(intr.begin(), intr.end(), j)) continue;
      const std::int64_t j0 = j + N;
      const std::int64_t jb = j - range.lo;
      a_term += full_column(j0)[static_cast<std::size_t>(j0)].imag() +
                block_column(jb)[static_cast<std::size_t>(jb)].imag();
    }

    // dropped couplings (k in block, l outside, band distance <= L)
    for (std::int64_t k = range.lo; k <= range.hi; ++k) {
      const std::int64_t k0 = k + N;
      for (std::int64_t off = -L; off <= L; ++off) {
        if (off == 0) continue;
        std::int64_t l0 = k0 + off;
        if (storage.periodic) {
          l0 = (l0 % dim + dim) % dim;
        } else if (l0 < 0 || l0 >= dim) {
          continue;
        }
        const std::int64_t l = l0 - N;
        if (l >= range.lo && l <= range.hi) continue;  // intra-block coupling kept
        const double h_kl = storage.entry(k0, l0);
        if (h_kl == 0.0) continue;
        const auto& gp_k = block_column(k - range.lo);
        const auto& g_l = full_column(l0);
        for (std::int64_t j : intr) {
          const double gp = std::abs(gp_k[static_cast<std::size_t>(j - range.lo)]);
          const double gf = std::abs(g_l[static_cast<std::size_t>(j + N)]);
          b_term += gp * std::abs(h_kl) * gf;
        }
      }
    }
  }

  ResolventErrorTerms out;
  out.a_term = a_term / static_cast<double>(dim);
  out.b_term = b_term / static_cast<double>(dim);
  return out;
}

}  // namespace rbmlab
