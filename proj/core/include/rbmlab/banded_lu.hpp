// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rbmlab/band_matrix.hpp"

namespace rbmlab {

// Banded LU with partial pivoting for complex general band matrices
// (kl subdiagonals, ku superdiagonals; fill widens U to kl+ku).
class BandedLU {
 public:
  BandedLU(std::int64_t n, std::int64_t kl, std::int64_t ku);

  // populate before factor(); i, j must satisfy -kl <= i-j <= ku
  void set(std::int64_t i, std::int64_t j, std::complex<double> value);

  void factor();
  void solve_in_place(std::vector<std::complex<double>>& b) const;

 private:
  std::complex<double>& ab(std::int64_t i, std::int64_t j) {
    return ab_[static_cast<std::size_t>(j * ldab_ + (kv_ + i - j))];
  }
  const std::complex<double>& ab(std::int64_t i, std::int64_t j) const {
    return ab_[static_cast<std::size_t>(j * ldab_ + (kv_ + i - j))];
  }

  std::int64_t n_, kl_, ku_, kv_, ldab_;
  std::vector<std::complex<double>> ab_;
  std::vector<std::int64_t> ipiv_;
  bool factored_ = false;
};

// Columns of G(z) = (H - z)^{-1} for a real symmetric band matrix H and
// Im z > 0, via one banded LU factorization. Periodic matrices are folded to
// an ordinary band of halfwidth 2L first (permutation similarity), so solves
// stay O(dim * L^2). Every returned column is residual-checked against
// ||(H-z)x - e_j||_inf <= 1e-10 * (||H|| + |z|).
class ResolventSolver {
 public:
  ResolventSolver(BandStorage matrix, std::complex<double> z);

  std::vector<std::complex<double>> column(std::int64_t j) const;
  std::complex<double> entry(std::int64_t i, std::int64_t j) const;  // via column(j)

  std::int64_t dim() const { return matrix_.dim; }
  std::complex<double> shift() const { return z_; }

 private:
  BandStorage matrix_;
  std::complex<double> z_;
  BandedLU lu_;
  std::vector<std::int64_t> perm_, inv_perm_;  // identity when not periodic
  double norm_bound_;
};

}  // namespace rbmlab
