// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#include "rbmlab/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rbmlab/errors.hpp"

namespace rbmlab {

namespace {

// Working layout for the reduction: w(d, j) = A(j+d, j), d = 0..m, kept
// column-major (j outer) so the vertical band segments touched by a rotation
// are contiguous and the horizontal ones stride by m.
class BandWork {
 public:
  BandWork(std::int64_t n, std::int64_t m)
      : n_(n), m_(m), a_(static_cast<std::size_t>((m + 1) * n), 0.0) {}

  double& at(std::int64_t d, std::int64_t j) {
    return a_[static_cast<std::size_t>(j * (m_ + 1) + d)];
  }
  double at(std::int64_t d, std::int64_t j) const {
    return a_[static_cast<std::size_t>(j * (m_ + 1) + d)];
  }
  std::int64_t n() const { return n_; }
  std::int64_t m() const { return m_; }

 private:
  std::int64_t n_, m_;
  std::vector<double> a_;
};

BandWork load_work(const BandStorage& s) {
  // non-periodic storage only; A(j+d, j) = slot(d, j+d)
  BandWork w(s.dim, s.halfwidth);
  for (std::int64_t j = 0; j < s.dim; ++j) {
    for (std::int64_t d = 0; d <= s.halfwidth && j + d < s.dim; ++d) {
      w.at(d, j) = s.slot(d, j + d);
    }
  }
  return w;
}

// Cyclic indices reordered as 0, n-1, 1, n-2, ...: a cyclic band of halfwidth
// L becomes an ordinary band of halfwidth min(2L, n-1).
BandWork fold_periodic(const BandStorage& s) {
  const std::int64_t n = s.dim;
  const std::int64_t m = std::min(2 * s.halfwidth, n - 1);
  std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
  for (std::int64_t pos = 0; pos < n; ++pos) {
    perm[static_cast<std::size_t>(pos)] = (pos % 2 == 0) ? pos / 2 : n - 1 - (pos - 1) / 2;
  }
  BandWork w(n, m);
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t d = 0; d <= m && j + d < n; ++d) {
      w.at(d, j) = s.entry(perm[static_cast<std::size_t>(j + d)],
                           perm[static_cast<std::size_t>(j)]);
    }
  }
  return w;
}

// Two-sided rotation G^T A G in the plane (p, p+1), G = [[c, s], [-s, c]],
// applied to the in-band entries with column pairs starting at tstart (the
// annihilation pair itself is handled by the caller). Returns the fill
// element created at (p+m+1, p), or 0 when that position is off the matrix.
double apply_rotation(BandWork& w, std::int64_t p, double c, double s, std::int64_t tstart) {
  const std::int64_t n = w.n();
  const std::int64_t m = w.m();

  // column pairs (A(p,t), A(p+1,t)); both offsets lie within the band here
  for (std::int64_t t = tstart; t < p; ++t) {
    const double u = w.at(p - t, t);
    const double v = w.at(p + 1 - t, t);
    w.at(p - t, t) = c * u - s * v;
    w.at(p + 1 - t, t) = s * u + c * v;
  }

  // diagonal 2x2 block
  {
    const double alpha = w.at(0, p);
    const double beta = w.at(1, p);
    const double gamma = w.at(0, p + 1);
    w.at(0, p) = c * c * alpha - 2.0 * c * s * beta + s * s * gamma;
    w.at(0, p + 1) = s * s * alpha + 2.0 * c * s * beta + c * c * gamma;
    w.at(1, p) = c * s * (alpha - gamma) + (c * c - s * s) * beta;
  }

  // row pairs (A(t,p), A(t,p+1)) for t > p+1; t = p+m+1 creates the fill
  double new_bulge = 0.0;
  const std::int64_t tmax = std::min(p + m + 1, n - 1);
  for (std::int64_t t = p + 2; t <= tmax; ++t) {
    const bool out = (t - p == m + 1);
    const double u = out ? 0.0 : w.at(t - p, p);
    const double v = w.at(t - p - 1, p + 1);
    if (out) {
      new_bulge = c * u - s * v;
    } else {
      w.at(t - p, p) = c * u - s * v;
    }
    w.at(t - p - 1, p + 1) = s * u + c * v;
  }
  return new_bulge;
}

void make_rotation(double pivot, double target, double& c, double& s) {
  const double r = std::hypot(pivot, target);
  if (r == 0.0) {
    c = 1.0;
    s = 0.0;
    return;
  }
  c = pivot / r;
  s = -target / r;
}

Tridiagonal reduce_work(BandWork w) {
  const std::int64_t n = w.n();
  const std::int64_t m = w.m();

  if (m >= 2) {
    for (std::int64_t k = 0; k + 2 <= n - 1; ++k) {
      for (std::int64_t d = std::min(m, n - 1 - k); d >= 2; --d) {
        const double target = w.at(d, k);
        if (target == 0.0) continue;
        double c, s;
        const double pivot = w.at(d - 1, k);
        make_rotation(pivot, target, c, s);
        std::int64_t p = k + d - 1;
        // annihilation pair in column k; columns < k are already reduced
        w.at(d - 1, k) = c * pivot - s * target;
        w.at(d, k) = 0.0;
        double bulge = apply_rotation(w, p, c, s, k + 1);
        // chase the fill element down the band
        while (bulge != 0.0 && p + m + 1 <= n - 1) {
          const std::int64_t q = p;  // fill sits at (q+m+1, q)
          p = q + m;
          const double chase_pivot = w.at(m, q);
          make_rotation(chase_pivot, bulge, c, s);
          w.at(m, q) = c * chase_pivot - s * bulge;
          bulge = apply_rotation(w, p, c, s, q + 1);
        }
      }
    }
  }

  Tridiagonal t;
  t.diag.resize(static_cast<std::size_t>(n));
  t.offdiag.resize(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (std::int64_t i = 0; i < n; ++i) t.diag[static_cast<std::size_t>(i)] = w.at(0, i);
  for (std::int64_t i = 0; i + 1 < n; ++i) {
    t.offdiag[static_cast<std::size_t>(i)] = (m >= 1) ? w.at(1, i) : 0.0;
  }
  return t;
}

}  // namespace

Tridiagonal reduce_to_tridiagonal(const BandStorage& m) {
  if (m.dim <= 0) throw config_error("empty matrix");
  if (m.periodic && m.halfwidth >= 1 && m.dim > 2) {
    return reduce_work(fold_periodic(m));
  }
  return reduce_work(load_work(m));
}

Tridiagonal reduce_to_tridiagonal(const BandMatrix& m) {
  return reduce_to_tridiagonal(m.storage());
}

std::vector<double> eigenvalues_all(const Tridiagonal& t) {
  std::vector<double> d = t.diag;
  const std::int64_t n = static_cast<std::int64_t>(d.size());
  if (n == 0) return d;
  std::vector<double> e = t.offdiag;
  e.resize(static_cast<std::size_t>(n), 0.0);
  const double eps = std::numeric_limits<double>::epsilon();

  for (std::int64_t l = 0; l < n; ++l) {
    std::int64_t iter = 0;
    std::int64_t split;
    do {
      for (split = l; split < n - 1; ++split) {
        const double dd = std::abs(d[split]) + std::abs(d[split + 1]);
        if (std::abs(e[split]) <= eps * dd) break;
      }
      if (split != l) {
        if (iter++ == 50) {
          throw numerical_error("tridiagonal QL did not converge within 50 iterations", l);
        }
        // Wilkinson shift from the leading 2x2
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[split] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        std::int64_t i;
        for (i = split - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[split] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[split] = 0.0;
      }
    } while (split != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

Spectrum spectrum_of(const BandMatrix& m) {
  Spectrum s;
  s.eigenvalues = eigenvalues_all(reduce_to_tridiagonal(m));
  s.params = m.params();
  return s;
}

std::int64_t sturm_count_leq(const Tridiagonal& t, double x) {
  const std::int64_t n = t.size();
  if (n == 0) return 0;
  double emax2 = 1.0;
  for (double e : t.offdiag) emax2 = std::max(emax2, e * e);
  const double pivmin = std::numeric_limits<double>::min() * emax2;

  std::int64_t count = 0;
  double q = t.diag[0] - x;
  if (std::abs(q) <= pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::int64_t i = 1; i < n; ++i) {
    const double e = t.offdiag[static_cast<std::size_t>(i - 1)];
    q = t.diag[static_cast<std::size_t>(i)] - x - e * e / q;
    if (std::abs(q) <= pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

IntervalCount count_in_interval(const Tridiagonal& t, double a, double b) {
  if (!(a < b)) throw config_error("count_in_interval: requires a < b");
  IntervalCount out;
  out.interval = Interval{a, b};
  out.count = sturm_count_leq(t, b) - sturm_count_leq(t, a);
  return out;
}

}  // namespace rbmlab
