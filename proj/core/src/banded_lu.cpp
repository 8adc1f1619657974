// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#include "rbmlab/banded_lu.hpp"

#include <algorithm>
#include <cmath>

#include "rbmlab/errors.hpp"

namespace rbmlab {

BandedLU::BandedLU(std::int64_t n, std::int64_t kl, std::int64_t ku)
    : n_(n), kl_(kl), ku_(ku), kv_(kl + ku), ldab_(2 * kl + ku + 1),
      ab_(static_cast<std::size_t>(ldab_ * n), std::complex<double>(0.0, 0.0)),
      ipiv_(static_cast<std::size_t>(n), 0) {
  if (n <= 0 || kl < 0 || ku < 0) throw config_error("invalid band dimensions");
}

void BandedLU::set(std::int64_t i, std::int64_t j, std::complex<double> value) {
  ab(i, j) = value;
}

void BandedLU::factor() {
  for (std::int64_t j = 0; j < n_; ++j) {
    const std::int64_t km = std::min(kl_, n_ - 1 - j);
    // partial pivot within the column's subdiagonal reach
    std::int64_t jp = 0;
    double best = std::abs(ab(j, j));
    for (std::int64_t i = 1; i <= km; ++i) {
      const double mag = std::abs(ab(j + i, j));
      if (mag > best) {
        best = mag;
        jp = i;
      }
    }
    ipiv_[static_cast<std::size_t>(j)] = j + jp;
    if (best == 0.0) {
      throw numerical_error("banded LU: exactly singular pivot column", j);
    }
    const std::int64_t ju = std::min(n_ - 1, j + kv_);
    if (jp != 0) {
      for (std::int64_t c = j; c <= ju; ++c) std::swap(ab(j, c), ab(j + jp, c));
    }
    if (km > 0) {
      const std::complex<double> inv = 1.0 / ab(j, j);
      for (std::int64_t i = 1; i <= km; ++i) ab(j + i, j) *= inv;
      for (std::int64_t c = j + 1; c <= ju; ++c) {
        const std::complex<double> f = ab(j, c);
        if (f != std::complex<double>(0.0, 0.0)) {
          for (std::int64_t i = 1; i <= km; ++i) ab(j + i, c) -= ab(j + i, j) * f;
        }
      }
    }
  }
  factored_ = true;
}

void BandedLU::solve_in_place(std::vector<std::complex<double>>& b) const {
  if (!factored_) throw numerical_error("banded LU: solve before factor");
  for (std::int64_t j = 0; j < n_; ++j) {
    const std::int64_t p = ipiv_[static_cast<std::size_t>(j)];
    if (p != j) std::swap(b[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(p)]);
    const std::int64_t km = std::min(kl_, n_ - 1 - j);
    const std::complex<double> bj = b[static_cast<std::size_t>(j)];
    if (bj != std::complex<double>(0.0, 0.0)) {
      for (std::int64_t i = 1; i <= km; ++i) {
        b[static_cast<std::size_t>(j + i)] -= ab(j + i, j) * bj;
      }
    }
  }
  for (std::int64_t j = n_ - 1; j >= 0; --j) {
    b[static_cast<std::size_t>(j)] /= ab(j, j);
    const std::complex<double> bj = b[static_cast<std::size_t>(j)];
    const std::int64_t imin = std::max<std::int64_t>(0, j - kv_);
    if (bj != std::complex<double>(0.0, 0.0)) {
      for (std::int64_t i = imin; i < j; ++i) {
        b[static_cast<std::size_t>(i)] -= ab(i, j) * bj;
      }
    }
  }
}

namespace {

std::vector<std::int64_t> fold_permutation(std::int64_t n) {
  std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
  for (std::int64_t pos = 0; pos < n; ++pos) {
    perm[static_cast<std::size_t>(pos)] = (pos % 2 == 0) ? pos / 2 : n - 1 - (pos - 1) / 2;
  }
  return perm;
}

double inf_norm_bound(const BandStorage& m) {
  double best = 0.0;
  for (std::int64_t i = 0; i < m.dim; ++i) {
    double row = 0.0;
    const std::int64_t reach = std::min<std::int64_t>(m.halfwidth, m.dim - 1);
    for (std::int64_t off = -reach; off <= reach; ++off) {
      std::int64_t j = i + off;
      if (m.periodic) {
        j = (j % m.dim + m.dim) % m.dim;
      } else if (j < 0 || j >= m.dim) {
        continue;
      }
      row += std::abs(m.entry(i, j));
    }
    best = std::max(best, row);
  }
  return best;
}

}  // namespace

ResolventSolver::ResolventSolver(BandStorage matrix, std::complex<double> z)
    : matrix_(std::move(matrix)), z_(z),
      lu_(matrix_.dim,
          std::min(matrix_.periodic ? 2 * matrix_.halfwidth : matrix_.halfwidth, matrix_.dim - 1),
          std::min(matrix_.periodic ? 2 * matrix_.halfwidth : matrix_.halfwidth, matrix_.dim - 1)),
      norm_bound_(0.0) {
  if (!(z.imag() > 0.0)) throw config_error("resolvent shift must satisfy Im z > 0");
  const std::int64_t n = matrix_.dim;
  const std::int64_t band =
      std::min(matrix_.periodic ? 2 * matrix_.halfwidth : matrix_.halfwidth, n - 1);

  if (matrix_.periodic && matrix_.halfwidth >= 1 && n > 2) {
    perm_ = fold_permutation(n);
  } else {
    perm_.resize(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) perm_[static_cast<std::size_t>(i)] = i;
  }
  inv_perm_.resize(static_cast<std::size_t>(n));
  for (std::int64_t pos = 0; pos < n; ++pos) {
    inv_perm_[static_cast<std::size_t>(perm_[static_cast<std::size_t>(pos)])] = pos;
  }

  for (std::int64_t col = 0; col < n; ++col) {
    const std::int64_t jo = perm_[static_cast<std::size_t>(col)];
    for (std::int64_t row = std::max<std::int64_t>(0, col - band);
         row <= std::min(n - 1, col + band); ++row) {
      const std::int64_t io = perm_[static_cast<std::size_t>(row)];
      std::complex<double> v(matrix_.entry(io, jo), 0.0);
      if (io == jo) v -= z;
      if (v != std::complex<double>(0.0, 0.0)) lu_.set(row, col, v);
    }
  }
  lu_.factor();
  norm_bound_ = inf_norm_bound(matrix_);
}

std::vector<std::complex<double>> ResolventSolver::column(std::int64_t j) const {
  const std::int64_t n = matrix_.dim;
  if (j < 0 || j >= n) throw config_error("resolvent column index out of range");
  std::vector<std::complex<double>> b(static_cast<std::size_t>(n), std::complex<double>(0.0));
  b[static_cast<std::size_t>(inv_perm_[static_cast<std::size_t>(j)])] = 1.0;
  lu_.solve_in_place(b);

  std::vector<std::complex<double>> x(static_cast<std::size_t>(n));
  for (std::int64_t pos = 0; pos < n; ++pos) {
    x[static_cast<std::size_t>(perm_[static_cast<std::size_t>(pos)])] =
        b[static_cast<std::size_t>(pos)];
  }

  // residual check: (H - z) x = e_j
  const double tol = 1e-10 * (norm_bound_ + std::abs(z_));
  double worst = 0.0;
  std::vector<std::complex<double>> hx(static_cast<std::size_t>(n), std::complex<double>(0.0));
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t d = 0; d <= matrix_.halfwidth; ++d) {
      std::int64_t c = i - d;
      if (matrix_.periodic) {
        c = (c % n + n) % n;
      } else if (c < 0) {
        continue;
      }
      const double v = matrix_.slot(d, i);
      hx[static_cast<std::size_t>(i)] += v * x[static_cast<std::size_t>(c)];
      if (d != 0 && c != i) hx[static_cast<std::size_t>(c)] += v * x[static_cast<std::size_t>(i)];
    }
  }
  for (std::int64_t i = 0; i < n; ++i) {
    std::complex<double> r = hx[static_cast<std::size_t>(i)] - z_ * x[static_cast<std::size_t>(i)];
    if (i == j) r -= 1.0;
    worst = std::max(worst, std::abs(r));
  }
  if (worst > tol) {
    throw numerical_error("resolvent solve residual exceeds tolerance", j);
  }
  return x;
}

std::complex<double> ResolventSolver::entry(std::int64_t i, std::int64_t j) const {
  return column(j)[static_cast<std::size_t>(i)];
}

}  // namespace rbmlab
