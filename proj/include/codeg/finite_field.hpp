#pragma once

// Matrices over a prime field and table-based fields F_{p^d}.
//
// Vectors of F_p^d are encoded as integers Σ v_i p^i (v_0 least significant);
// elements of F_{p^d} use the same encoding for their polynomial coefficients,
// so F_{p^d} and F_p^d share point labels.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "codeg/error.hpp"
#include "codeg/numtheory.hpp"

namespace codeg {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t n, std::uint64_t p) : n_(n), p_(p), a_(n * n, 0) {}

  /// Row-major entries reduced mod p.
  Matrix(std::size_t n, std::uint64_t p, const std::vector<std::int64_t>& rows) : Matrix(n, p) {
    if (rows.size() != n * n) throw InvalidArgument("matrix needs " + std::to_string(n * n) + " entries");
    const auto pp = static_cast<std::int64_t>(p);
    for (std::size_t i = 0; i < rows.size(); ++i) a_[i] = static_cast<std::uint64_t>(((rows[i] % pp) + pp) % pp);
  }

  static Matrix identity(std::size_t n, std::uint64_t p) {
    Matrix m(n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  [[nodiscard]] std::size_t dim() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t prime() const noexcept { return p_; }
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  [[nodiscard]] std::uint64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  [[nodiscard]] const std::vector<std::uint64_t>& entries() const noexcept { return a_; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_ || x.p_ != y.p_) throw InvalidArgument("matrix shape mismatch");
    Matrix r(x.n_, x.p_);
    for (std::size_t i = 0; i < x.n_; ++i) {
      for (std::size_t k = 0; k < x.n_; ++k) {
        const std::uint64_t v = x(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) r(i, j) = (r(i, j) + v * y(k, j)) % x.p_;
      }
    }
    return r;
  }

  bool operator==(const Matrix&) const = default;

  [[nodiscard]] Matrix transpose() const {
    Matrix r(n_, p_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    }
    return r;
  }

  [[nodiscard]] std::uint64_t determinant() const {
    Matrix m = *this;
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t piv = c;
      while (piv < n_ && m(piv, c) == 0) ++piv;
      if (piv == n_) return 0;
      if (piv != c) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(m(piv, j), m(c, j));
        det = (p_ - det) % p_;
      }
      det = det * m(c, c) % p_;
      const std::uint64_t inv = inv_mod(m(c, c), p_);
      for (std::size_t i = c + 1; i < n_; ++i) {
        const std::uint64_t f = m(i, c) * inv % p_;
        for (std::size_t j = c; j < n_; ++j) m(i, j) = (m(i, j) + (p_ - f) * m(c, j)) % p_;
      }
    }
    return det;
  }

  [[nodiscard]] Matrix inverse() const {
    Matrix m = *this;
    Matrix r = identity(n_, p_);
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t piv = c;
      while (piv < n_ && m(piv, c) == 0) ++piv;
      if (piv == n_) throw InvalidArgument("singular matrix");
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(m(piv, j), m(c, j));
        std::swap(r(piv, j), r(c, j));
      }
      const std::uint64_t inv = inv_mod(m(c, c), p_);
      for (std::size_t j = 0; j < n_; ++j) {
        m(c, j) = m(c, j) * inv % p_;
        r(c, j) = r(c, j) * inv % p_;
      }
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == c || m(i, c) == 0) continue;
        const std::uint64_t f = p_ - m(i, c);
        for (std::size_t j = 0; j < n_; ++j) {
          m(i, j) = (m(i, j) + f * m(c, j)) % p_;
          r(i, j) = (r(i, j) + f * r(c, j)) % p_;
        }
      }
    }
    return r;
  }

  /// M·v on encoded vectors.
  [[nodiscard]] std::uint64_t apply(std::uint64_t v) const {
    std::vector<std::uint64_t> x(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      x[i] = v % p_;
      v /= p_;
    }
    std::uint64_t out = 0;
    for (std::size_t i = n_; i-- > 0;) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < n_; ++j) s = (s + (*this)(i, j) * x[j]) % p_;
      out = out * p_ + s;
    }
    return out;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < n_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < n_; ++j) s += (j ? "," : "") + std::to_string((*this)(i, j));
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t n_ = 0;
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> a_;
};

inline std::uint64_t int_pow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

/// Linear span dimension of a set of encoded vectors in F_p^d.
inline std::size_t span_dimension(const std::vector<std::uint64_t>& vecs, std::uint64_t p, std::size_t d) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (auto v : vecs) {
    std::vector<std::uint64_t> r(d);
    for (std::size_t i = 0; i < d; ++i) {
      r[i] = v % p;
      v /= p;
    }
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < d && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t inv = inv_mod(rows[rank][c], p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c] * inv % p;
      for (std::size_t j = 0; j < d; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

/// F_{p^d} = F_p[x]/(f) with f the monic irreducible polynomial of degree d
/// whose coefficient tuple (c_{d-1}, ..., c_0) is lexicographically least.
class FiniteField {
 public:
  FiniteField(std::uint64_t p, std::size_t d) : p_(p), d_(d), q_(int_pow(p, d)) {
    if (!is_prime(p)) throw InvalidArgument("field characteristic must be prime");
    if (d == 0) throw InvalidArgument("field degree must be positive");
    poly_ = least_irreducible();
    // smallest element of multiplicative order q-1
    for (std::uint64_t a = 1; a < q_; ++a) {
      if (multiplicative_order(a) == q_ - 1) {
        primitive_ = a;
        break;
      }
    }
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k + 1 < q_; ++k) {
      exp_[k] = x;
      log_[x] = k;
      x = slow_mul(x, primitive_);
    }
  }

  [[nodiscard]] std::uint64_t characteristic() const noexcept { return p_; }
  [[nodiscard]] std::size_t degree() const noexcept { return d_; }
  [[nodiscard]] std::uint64_t size() const noexcept { return q_; }
  [[nodiscard]] std::uint64_t primitive_element() const noexcept { return primitive_; }
  /// Lower coefficients c_0..c_{d-1} of the defining polynomial.
  [[nodiscard]] const std::vector<std::uint64_t>& modulus() const noexcept { return poly_; }

  [[nodiscard]] std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0, place = 1;
    for (std::size_t i = 0; i < d_; ++i) {
      r += ((a % p_ + b % p_) % p_) * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return r;
  }
  [[nodiscard]] std::uint64_t neg(std::uint64_t a) const {
    std::uint64_t r = 0, place = 1;
    for (std::size_t i = 0; i < d_; ++i) {
      r += ((p_ - a % p_) % p_) * place;
      a /= p_;
      place *= p_;
    }
    return r;
  }
  [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  [[nodiscard]] std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw InvalidArgument("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  [[nodiscard]] std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[a]) * e) % (q_ - 1))];
  }
  /// The element x^i (the i-th basis vector).
  [[nodiscard]] std::uint64_t basis(std::size_t i) const { return int_pow(p_, i); }

  /// Matrix over F_p of the F_p-linear map y -> f(y).
  template <class F>
  [[nodiscard]] Matrix linear_map(F f) const {
    Matrix m(d_, p_);
    for (std::size_t j = 0; j < d_; ++j) {
      std::uint64_t img = f(basis(j));
      for (std::size_t i = 0; i < d_; ++i) {
        m(i, j) = img % p_;
        img /= p_;
      }
    }
    return m;
  }

  [[nodiscard]] Matrix multiplication_matrix(std::uint64_t a) const {
    return linear_map([&](std::uint64_t y) { return mul(a, y); });
  }
  [[nodiscard]] Matrix frobenius_matrix() const {
    return linear_map([&](std::uint64_t y) { return pow(y, p_); });
  }

 private:
  // polynomial helpers on coefficient vectors (low degree first)
  static std::vector<std::uint64_t> decode(std::uint64_t v, std::uint64_t p, std::size_t len) {
    std::vector<std::uint64_t> c(len);
    for (std::size_t i = 0; i < len; ++i) {
      c[i] = v % p;
      v /= p;
    }
    return c;
  }

  // remainder of a modulo monic g
  static std::vector<std::uint64_t> poly_rem(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& g,
                                             std::uint64_t p) {
    const std::size_t dg = g.size() - 1;
    for (std::size_t i = a.size(); i-- > dg;) {
      const std::uint64_t c = a[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dg; ++j) a[i - dg + j] = (a[i - dg + j] + (p - c) * g[j]) % p;
    }
    a.resize(dg);
    return a;
  }

  std::vector<std::uint64_t> least_irreducible() const {
    for (std::uint64_t code = 0; code < q_; ++code) {
      std::vector<std::uint64_t> f = decode(code, p_, d_);
      f.push_back(1);
      bool irreducible = true;
      for (std::size_t k = 1; 2 * k <= d_ && irreducible; ++k) {
        for (std::uint64_t gc = 0; gc < int_pow(p_, k); ++gc) {
          std::vector<std::uint64_t> g = decode(gc, p_, k);
          g.push_back(1);
          auto r = poly_rem(f, g, p_);
          if (std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; })) {
            irreducible = false;
            break;
          }
        }
      }
      if (irreducible) {
        f.pop_back();
        return f;
      }
    }
    throw InternalError("no irreducible polynomial found");
  }

  std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const {
    auto x = decode(a, p_, d_), y = decode(b, p_, d_);
    std::vector<std::uint64_t> prod(2 * d_, 0);
    for (std::size_t i = 0; i < d_; ++i) {
      for (std::size_t j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    std::vector<std::uint64_t> g = poly_;
    g.push_back(1);
    auto r = poly_rem(prod, g, p_);
    std::uint64_t out = 0;
    for (std::size_t i = d_; i-- > 0;) out = out * p_ + r[i];
    return out;
  }

  std::uint64_t multiplicative_order(std::uint64_t a) const {
    std::uint64_t x = a, k = 1;
    while (x != 1) {
      x = slow_mul(x, a);
      ++k;
      if (k > q_) return 0;
    }
    return k;
  }

  std::uint64_t p_;
  std::size_t d_;
  std::uint64_t q_;
  std::vector<std::uint64_t> poly_;
  std::uint64_t primitive_ = 1;
  std::vector<std::uint64_t> exp_;
  std::vector<std::uint64_t> log_;
};

}  // namespace codeg
