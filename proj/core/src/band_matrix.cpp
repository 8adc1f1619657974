// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#include "rbmlab/band_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "rbmlab/errors.hpp"

namespace rbmlab {

std::int64_t band_halfwidth_for(std::int64_t half_size, double alpha) {
  if (half_size <= 0) return 0;
  return static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(half_size), alpha)));
}

BandMatrixParams BandMatrixParams::from_alpha(std::int64_t half_size, double alpha,
                                              EntryDistribution distribution, std::uint64_t seed,
                                              bool periodic) {
  BandMatrixParams p;
  p.half_size = half_size;
  p.alpha = alpha;
  p.band_halfwidth = band_halfwidth_for(half_size, alpha);
  p.periodic = periodic;
  p.distribution = std::move(distribution);
  p.seed = seed;
  p.validate();
  return p;
}

BandMatrixParams BandMatrixParams::from_halfwidth(std::int64_t half_size,
                                                  std::int64_t band_halfwidth,
                                                  EntryDistribution distribution,
                                                  std::uint64_t seed, bool periodic) {
  BandMatrixParams p;
  p.half_size = half_size;
  p.band_halfwidth = band_halfwidth;
  p.alpha = (band_halfwidth <= 1 || half_size <= 1)
                ? 0.0
                : std::log(static_cast<double>(band_halfwidth)) /
                      std::log(static_cast<double>(half_size));
  p.periodic = periodic;
  p.distribution = std::move(distribution);
  p.seed = seed;
  p.validate();
  return p;
}

void BandMatrixParams::validate() const {
  if (half_size < 0) throw config_error("half_size N must be >= 0");
  if (alpha < 0.0 || alpha > 1.0) throw config_error("alpha must lie in [0, 1]");
  if (band_halfwidth < 0) throw config_error("band halfwidth L must be >= 0");
  if (band_width() > dim()) {
    throw config_error("band width W = 2L+1 exceeds matrix dimension 2N+1");
  }
}

std::int64_t BandStorage::band_distance(std::int64_t i, std::int64_t j) const {
  std::int64_t d = i > j ? i - j : j - i;
  if (periodic && dim - d < d) d = dim - d;
  return d;
}

double BandStorage::entry(std::int64_t i, std::int64_t j) const {
  if (band_distance(i, j) > halfwidth) return 0.0;
  if (!periodic) {
    const std::int64_t r = std::max(i, j);
    return slot(r - std::min(i, j), r);
  }
  // stored once: pair (i, (i-d) mod dim) lives in row i at offset d
  std::int64_t d = (i - j) % dim;
  if (d < 0) d += dim;
  if (d <= halfwidth) return slot(d, i);
  d = dim - d;  // = (j - i) mod dim
  return slot(d, j);
}

std::vector<double> BandStorage::multiply(const std::vector<double>& x) const {
  std::vector<double> y(static_cast<std::size_t>(dim), 0.0);
  for (std::int64_t i = 0; i < dim; ++i) {
    for (std::int64_t d = 0; d <= halfwidth; ++d) {
      std::int64_t j = i - d;
      if (periodic) {
        j = (j % dim + dim) % dim;
      } else if (j < 0) {
        continue;
      }
      const double v = slot(d, i);
      y[static_cast<std::size_t>(i)] += v * x[static_cast<std::size_t>(j)];
      if (d != 0 && j != i) y[static_cast<std::size_t>(j)] += v * x[static_cast<std::size_t>(i)];
    }
  }
  return y;
}

Interval gershgorin_interval(const BandStorage& m) {
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (std::int64_t i = 0; i < m.dim; ++i) {
    double center = 0.0, radius = 0.0;
    const std::int64_t reach = std::min<std::int64_t>(m.halfwidth, m.dim - 1);
    for (std::int64_t off = -reach; off <= reach; ++off) {
      std::int64_t j = i + off;
      if (!m.periodic && (j < 0 || j >= m.dim)) continue;
      if (m.periodic) j = (j % m.dim + m.dim) % m.dim;
      if (m.band_distance(i, j) > m.halfwidth) continue;
      const double v = m.entry(i, j);
      if (j == i) {
        center = v;
      } else {
        radius += std::abs(v);
      }
    }
    if (first || center - radius < lo) lo = center - radius;
    if (first || center + radius > hi) hi = center + radius;
    first = false;
  }
  return Interval{lo, hi};
}

BandStorage sample_banded(std::int64_t dim, std::int64_t halfwidth, bool periodic,
                          const EntryDistribution& distribution, std::uint64_t seed) {
  if (dim <= 0) throw config_error("matrix dimension must be positive");
  if (2 * halfwidth + 1 > dim) {
    throw config_error("band width W = 2L+1 exceeds matrix dimension");
  }
  BandStorage m(dim, halfwidth, periodic);
  SplitMix64 rng(seed);
  auto sampler = distribution.make_sampler();
  const double scale = 1.0 / std::sqrt(static_cast<double>(2 * halfwidth + 1));
  for (std::int64_t i = 0; i < dim; ++i) {
    const std::int64_t dmax = periodic ? halfwidth : std::min(halfwidth, i);
    for (std::int64_t d = dmax; d >= 0; --d) {
      m.slot(d, i) = sampler.draw(rng) * scale;
    }
  }
  return m;
}

BandMatrix sample_band_matrix(const BandMatrixParams& params) {
  params.validate();
  return BandMatrix(params, sample_banded(params.dim(), params.band_halfwidth, params.periodic,
                                          params.distribution, params.seed));
}

std::vector<double> row_variance_profile(const BandMatrix& m) {
  const std::int64_t n = m.dim();
  const std::int64_t L = m.params().band_halfwidth;
  const double w = static_cast<double>(2 * L + 1);
  std::vector<double> profile(static_cast<std::size_t>(n), 1.0);
  if (m.params().periodic) return profile;  // cyclic rows always hold 2L+1 entries
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t count = std::min(n - 1, i + L) - std::max<std::int64_t>(0, i - L) + 1;
    profile[static_cast<std::size_t>(i)] = static_cast<double>(count) / w;
  }
  return profile;
}

BandStorage principal_submatrix(const BandStorage& m, std::int64_t lo, std::int64_t len) {
  if (lo < 0 || len <= 0 || lo + len > m.dim) {
    throw config_error("principal submatrix range out of bounds");
  }
  BandStorage sub(len, std::min(m.halfwidth, len - 1), false);
  for (std::int64_t i = 0; i < len; ++i) {
    const std::int64_t dmax = std::min(sub.halfwidth, i);
    for (std::int64_t d = 0; d <= dmax; ++d) {
      // |(lo+i) - (lo+i-d)| = d <= L: always the plain (non-wrapped) coupling
      sub.slot(d, i) = m.entry(lo + i, lo + i - d);
    }
  }
  return sub;
}

namespace {

void put_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 4);
}
void put_u64(std::ostream& os, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 8);
}
void put_f64(std::ostream& os, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  put_u64(os, bits);
}
std::uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}
std::uint64_t get_u64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}
double get_f64(std::istream& is) {
  const std::uint64_t bits = get_u64(is);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace

void write_band_matrix(const BandMatrix& m, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os.write("RBM1", 4);
  put_u32(os, 1);
  const auto& p = m.params();
  put_u64(os, static_cast<std::uint64_t>(p.half_size));
  put_u64(os, static_cast<std::uint64_t>(p.band_halfwidth));
  os.put(p.periodic ? 1 : 0);
  os.put(static_cast<char>(p.distribution.tag()));
  os.put(0);
  os.put(0);
  put_u32(os, static_cast<std::uint32_t>(p.distribution.parameters().size()));
  for (double v : p.distribution.parameters()) put_f64(os, v);
  put_u64(os, p.seed);
  for (double v : m.storage().bands) put_f64(os, v);
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

BandMatrix read_band_matrix(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "RBM1", 4) != 0) {
    throw std::runtime_error("not a band matrix file: " + path.string());
  }
  const std::uint32_t version = get_u32(is);
  if (version != 1) throw std::runtime_error("unsupported band matrix file version");
  const auto half_size = static_cast<std::int64_t>(get_u64(is));
  const auto halfwidth = static_cast<std::int64_t>(get_u64(is));
  const bool periodic = is.get() != 0;
  const auto tag = static_cast<std::uint8_t>(is.get());
  is.get();
  is.get();
  const std::uint32_t n_params = get_u32(is);
  std::vector<double> dist_params(n_params);
  for (auto& v : dist_params) v = get_f64(is);
  const std::uint64_t seed = get_u64(is);

  BandMatrixParams params = BandMatrixParams::from_halfwidth(
      half_size, halfwidth, EntryDistribution::from_tag(tag, std::move(dist_params)), seed,
      periodic);
  BandStorage storage(params.dim(), halfwidth, periodic);
  for (auto& v : storage.bands) v = get_f64(is);
  if (!is) throw std::runtime_error("truncated band matrix file: " + path.string());
  return BandMatrix(std::move(params), std::move(storage));
}

}  // namespace rbmlab
