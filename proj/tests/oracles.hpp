#pragma once

// Independent numeric references used to cross-check the exact engine.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "qcat/laurent_poly.hpp"
#include "qcat/scalar.hpp"

namespace oracle {

using cd = std::complex<double>;

// [n] at q = e^{i pi t}: sin(n pi t) / sin(pi t).
inline double qint_numeric(int n, double t) {
  return std::sin(n * std::numbers::pi * t) / std::sin(std::numbers::pi * t);
}

inline cd q_at(double t) { return std::polar(1.0, std::numbers::pi * t); }

// Random element of Q(v): ratio of short Laurent polynomials with small
// integer coefficients. The denominator is never zero.
class ScalarSampler {
public:
  explicit ScalarSampler(unsigned seed) : rng_(seed) {}

  qcat::LaurentPoly poly(bool nonzero) {
    std::uniform_int_distribution<int> low(-4, 4), len(1, 4), coeff(-3, 3);
    for (;;) {
      std::vector<mpz_class> c(len(rng_));
      for (auto& x : c) x = coeff(rng_);
      auto p = qcat::LaurentPoly::from_coeffs(low(rng_), std::move(c));
      if (!nonzero || !p.is_zero()) return p;
    }
  }

  qcat::ScalarQ scalar() { return qcat::ScalarQ(poly(false), poly(true)); }
  qcat::ScalarQ nonzero_scalar() { return qcat::ScalarQ(poly(true), poly(true)); }

private:
  std::mt19937 rng_;
};

// Least-squares solve of A x = b (A is m x n, m >= n) via the normal
// equations with partial pivoting. Returns nullopt if A^H A is singular.
inline std::optional<std::vector<cd>> least_squares(const std::vector<std::vector<cd>>& a,
                                                    const std::vector<cd>& b) {
  const std::size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
  std::vector<std::vector<cd>> g(n, std::vector<cd>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < m; ++r) g[i][j] += std::conj(a[r][i]) * a[r][j];
    for (std::size_t r = 0; r < m; ++r) g[i][n] += std::conj(a[r][i]) * b[r];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(g[r][c]) > std::abs(g[piv][c])) piv = r;
    if (std::abs(g[piv][c]) < 1e-12) return std::nullopt;
    std::swap(g[c], g[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const cd f = g[r][c] / g[c][c];
      for (std::size_t k = c; k <= n; ++k) g[r][k] -= f * g[c][k];
    }
  }
  std::vector<cd> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = g[i][n] / g[i][i];
  return x;
}

// First-row-and-column Kac weights: h_{r,s}(t) = ((r^2 - 1) t + (s^2 - 1)/t)/4 - (rs - 1)/2.
inline mpq_class kac_weight(int r, int s, const mpq_class& t) {
  mpq_class h = mpq_class(r * r - 1) * t / 4 + mpq_class(s * s - 1) / (4 * t) - mpq_class(r * s - 1) / 2;
  return h;
}

// Kac determinant formula: the level-N Shapovalov determinant of M(c(t), h)
// vanishes iff h = h_{r,s}(t) for some r, s >= 1 with rs <= N.
inline bool kac_predicts_zero(const mpq_class& h, const mpq_class& t, int level) {
  for (int r = 1; r <= level; ++r)
    for (int s = 1; r * s <= level; ++s)
      if (kac_weight(r, s, t) == h) return true;
  return false;
}

// Number of partitions of n by the pentagonal-number recurrence.
inline long partition_count(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
      if (g1 > k) break;
      const long sign = (j % 2 == 1) ? 1 : -1;
      p[k] += sign * p[k - g1];
      if (g2 <= k) p[k] += sign * p[k - g2];
    }
  }
  return p[n];
}

}  // namespace oracle
