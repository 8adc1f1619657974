// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#include "rbmlab/statistics.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "rbmlab/errors.hpp"

namespace rbmlab {

MeanStderr mean_stderr(std::span<const double> values) {
  MeanStderr out;
  out.count = static_cast<std::int64_t>(values.size());
  if (out.count == 0) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(out.count);
  if (out.count < 2) return out;
  double ss = 0.0;
  for (double v : values) {
    const double d = v - out.mean;
    ss += d * d;
  }
  const double var = ss / static_cast<double>(out.count - 1);
  out.stderr_of_mean = std::sqrt(var / static_cast<double>(out.count));
  return out;
}

LineFit fit_weighted_line(std::span<const double> x, std::span<const double> y,
                          std::span<const double> w) {
  if (x.size() != y.size() || x.size() != w.size()) {
    throw config_error("fit_weighted_line: mismatched lengths");
  }
  double sw = 0.0, swx = 0.0, swy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sw += w[i];
    swx += w[i] * x[i];
    swy += w[i] * y[i];
  }
  LineFit fit;
  fit.points = static_cast<std::int64_t>(x.size());
  if (sw <= 0.0 || x.size() < 2) {
    throw config_error("fit_weighted_line: need >= 2 points with positive weight");
  }
  const double xbar = swx / sw;
  const double ybar = swy / sw;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - xbar;
    const double dy = y[i] - ybar;
    sxx += w[i] * dx * dx;
    sxy += w[i] * dx * dy;
    syy += w[i] * dy * dy;
  }
  if (sxx <= 0.0) throw config_error("fit_weighted_line: degenerate abscissae");
  fit.slope = sxy / sxx;
  fit.intercept = ybar - fit.slope * xbar;
  const double ss_res = syy - fit.slope * sxy;
  fit.r_squared = syy > 0.0 ? 1.0 - std::max(0.0, ss_res) / syy : 1.0;
  // residual-variance based slope error
  std::int64_t npos = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (w[i] > 0.0) ++npos;
  }
  if (npos > 2) {
    const double sigma2 = std::max(0.0, ss_res) / static_cast<double>(npos - 2);
    fit.slope_stderr = std::sqrt(sigma2 / sxx);
  }
  return fit;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  std::vector<double> w(x.size(), 1.0);
  return fit_weighted_line(x, y, w);
}

double poisson_pmf(double lambda, std::int64_t k) {
  if (lambda <= 0.0) return k == 0 ? 1.0 : 0.0;
  double log_p = -lambda + static_cast<double>(k) * std::log(lambda) -
                 std::lgamma(static_cast<double>(k) + 1.0);
  return std::exp(log_p);
}

namespace {

// series expansion of P(a,x), valid for x < a+1
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// continued fraction for Q(a,x), valid for x >= a+1 (modified Lentz)
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw config_error("gamma_q: requires x >= 0, a > 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace rbmlab
