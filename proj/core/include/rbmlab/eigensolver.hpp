// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rbmlab/band_matrix.hpp"
#include "rbmlab/interval.hpp"

namespace rbmlab {

struct Tridiagonal {
  std::vector<double> diag;     // length n
  std::vector<double> offdiag;  // length n-1
  std::int64_t size() const { return static_cast<std::int64_t>(diag.size()); }
};

struct Spectrum {
  std::vector<double> eigenvalues;  // sorted ascending
  std::optional<BandMatrixParams> params;  // provenance when known
  std::int64_t size() const { return static_cast<std::int64_t>(eigenvalues.size()); }
};

struct IntervalCount {
  Interval interval;
  std::int64_t count = 0;
};

// Orthogonal reduction to tridiagonal form by Givens rotations with bulge
// chasing confined to the band; no dense matrix is formed. Periodic matrices
// are first folded (index order 0, n-1, 1, n-2, ...) which turns the cyclic
// band of halfwidth L into an ordinary band of halfwidth 2L, at the
// documented factor-of-two cost in reduction work.
Tridiagonal reduce_to_tridiagonal(const BandStorage& m);
Tridiagonal reduce_to_tridiagonal(const BandMatrix& m);

// All eigenvalues via implicit-shift QL with Wilkinson shifts, sorted
// ascending. Convergence: |e_k| <= eps * (|d_k| + |d_{k+1}|); at most 50
// iterations per eigenvalue, past which a numerical_error carrying the
// failing index is thrown.
std::vector<double> eigenvalues_all(const Tridiagonal& t);
Spectrum spectrum_of(const BandMatrix& m);

// Number of eigenvalues <= x, from the signs of the Sturm pivot sequence of
// t - x I. A vanishing pivot is replaced by -pivmin (counted as negative),
// with pivmin = smallest-normal * max(1, max_k e_k^2), so an eigenvalue
// exactly at x counts as "<= x".
std::int64_t sturm_count_leq(const Tridiagonal& t, double x);

// Exact count in (a, b] as sturm_count_leq(b) - sturm_count_leq(a).
IntervalCount count_in_interval(const Tridiagonal& t, double a, double b);

}  // namespace rbmlab
