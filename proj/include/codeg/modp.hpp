#pragma once

// Dense linear algebra over a prime field F_p, p < 2^32.

#include <cstdint>
#include <utility>
#include <vector>

#include "codeg/numtheory.hpp"

namespace codeg::modp {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;  // row-major

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

/// Row-reduces in place to reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& m, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const std::uint64_t inv = inv_mod(m[r][c], p);
    for (auto& x : m[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = sub(m[i][j], f * m[r][j] % p, p);
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

/// Basis of {x : m x = 0}.
inline Mat nullspace(Mat m, std::uint64_t p) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  const auto pivots = rref(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial det(xI - m), coefficients from constant term up.
/// Reduction to upper Hessenberg form followed by the standard recurrence.
inline Vec charpoly(Mat h, std::uint64_t p) {
  const std::size_t n = h.size();
  for (std::size_t c = 0; c + 2 < n; ++c) {
    const std::size_t m = c + 1;
    std::size_t i = m;
    while (i < n && h[i][c] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const std::uint64_t tinv = inv_mod(h[m][c], p);
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h[j][c] == 0) continue;
      const std::uint64_t u = h[j][c] * tinv % p;
      for (std::size_t k = 0; k < n; ++k) h[j][k] = sub(h[j][k], u * h[m][k] % p, p);
      for (std::size_t k = 0; k < n; ++k) h[k][m] = (h[k][m] + u * h[k][j]) % p;
    }
  }
  std::vector<Vec> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    // (x - h[m-1][m-1]) * polys[m-1]
    Vec q(m + 1, 0);
    const Vec& prev = polys[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      q[k + 1] = (q[k + 1] + prev[k]) % p;
      q[k] = sub(q[k], h[m - 1][m - 1] * prev[k] % p, p);
    }
    std::uint64_t t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = t * h[i][i - 1] % p;
      const std::uint64_t f = h[i - 1][m - 1] * t % p;
      if (f != 0) {
        for (std::size_t k = 0; k < polys[i - 1].size(); ++k) {
          q[k] = sub(q[k], f * polys[i - 1][k] % p, p);
        }
      }
    }
    polys[m] = std::move(q);
  }
  return polys[n];
}

inline std::uint64_t eval(const Vec& poly, std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 0;
  for (std::size_t k = poly.size(); k-- > 0;) r = (r * x + poly[k]) % p;
  return r;
}

/// All roots in F_p by exhaustive evaluation.
inline Vec roots(const Vec& poly, std::uint64_t p) {
  Vec out;
  for (std::uint64_t x = 0; x < p; ++x) {
    if (eval(poly, x, p) == 0) out.push_back(x);
  }
  return out;
}

/// Smallest generator of the multiplicative group of F_p.
inline std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const auto primes = prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : primes) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InvalidArgument("no primitive root");
}

}  // namespace codeg::modp
