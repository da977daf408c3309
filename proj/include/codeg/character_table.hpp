#pragma once

// Irreducible character tables by the Dixon–Schneider method.
//
// Central characters ω_χ(C_i) = |C_i|·χ(g_i)/χ(1) are the common eigenvectors
// of the class-multiplication matrices M_j[i][l] = a_{ijl}, where
// C_i·C_j = Σ_l a_{ijl}·C_l. They are found modulo a prime p ≡ 1 (mod exp G)
// with p > 2·sqrt|G|, by splitting F_p^k into eigenspaces of seeded random
// combinations of class matrices. Degrees come from the first orthogonality
// relation and exact values from the discrete Fourier inversion over the
// powers of each class representative. Every table is checked against the
// orthogonality relations in exact arithmetic before it is returned.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "codeg/classes.hpp"
#include "codeg/cyclotomic.hpp"
#include "codeg/modp.hpp"
#include "codeg/numtheory.hpp"

namespace codeg {

using ClassesPtr = std::shared_ptr<const ConjugacyClasses>;

struct Character {
  std::vector<Cyclotomic> values;  // indexed by class
  std::uint64_t degree = 1;
};

struct TableOptions {
  Limits limits;
  std::uint64_t seed = 42;
  /// Verify orthogonality exactly before returning.
  bool validate = true;
};

class CharacterTable {
 public:
  CharacterTable(ClassesPtr classes, std::vector<Character> chars, std::uint64_t prime,
                 std::uint64_t seed)
      : classes_(std::move(classes)), chars_(std::move(chars)), prime_(prime), seed_(seed) {}

  [[nodiscard]] const ClassesPtr& classes_ptr() const noexcept { return classes_; }
  [[nodiscard]] const ConjugacyClasses& classes() const noexcept { return *classes_; }
  [[nodiscard]] const PermGroup& group() const noexcept { return classes_->group(); }
  [[nodiscard]] std::uint64_t group_order() const noexcept { return classes_->group_order(); }
  [[nodiscard]] std::size_t size() const noexcept { return chars_.size(); }
  [[nodiscard]] const std::vector<Character>& characters() const noexcept { return chars_; }
  [[nodiscard]] const Character& operator[](std::size_t i) const { return chars_[i]; }
  [[nodiscard]] std::uint64_t degree(std::size_t i) const { return chars_[i].degree; }
  [[nodiscard]] const Cyclotomic& value(std::size_t chi, std::size_t cls) const {
    return chars_[chi].values[cls];
  }
  /// The prime used for the modular computation.
  [[nodiscard]] std::uint64_t prime() const noexcept { return prime_; }
  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

 private:
  ClassesPtr classes_;
  std::vector<Character> chars_;
  std::uint64_t prime_;
  std::uint64_t seed_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

/// Smallest prime p ≡ 1 (mod exponent) with p > 2·sqrt(order).
inline std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order) {
  std::uint64_t p = exponent + 1;
  while (!(is_prime(p) && p * p > 4 * order)) p += exponent;
  return p;
}

namespace detail {

class DixonSchneider {
 public:
  DixonSchneider(const ConjugacyClasses& classes, std::uint64_t seed)
      : cc_(classes),
        k_(classes.size()),
        order_(classes.group_order()),
        p_(dixon_prime(classes.exponent(), classes.group_order())),
        rng_(seed),
        matrices_(k_) {}

  std::uint64_t prime() const { return p_; }

  std::vector<Character> run() {
    std::vector<modp::Vec> omegas = central_characters();
    std::vector<Character> chars;
    std::vector<modp::Vec> modular;
    for (auto& w : omegas) {
      Character c;
      modp::Vec values;
      lift(w, c, values);
      chars.push_back(std::move(c));
      modular.push_back(std::move(values));
    }
    // trivial character first, then by degree, then by modular values
    std::vector<std::size_t> idx(chars.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    auto is_trivial = [&](std::size_t i) {
      return std::all_of(modular[i].begin(), modular[i].end(), [](auto v) { return v == 1; });
    };
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      const bool ta = is_trivial(a), tb = is_trivial(b);
      if (ta != tb) return ta;
      if (chars[a].degree != chars[b].degree) return chars[a].degree < chars[b].degree;
      return modular[a] < modular[b];
    });
    std::vector<Character> sorted;
    for (auto i : idx) sorted.push_back(std::move(chars[i]));
    return sorted;
  }

 private:
  const modp::Mat& class_matrix(std::size_t j) {
    if (!matrices_[j].empty()) return matrices_[j];
    modp::Mat m(k_, modp::Vec(k_, 0));
    const PermGroup& g = cc_.group();
    std::vector<Permutation> inv;
    for (auto r : cc_.members(j)) inv.push_back(g.unrank(r).inverse());
    for (std::size_t l = 0; l < k_; ++l) {
      const Permutation& z = cc_.rep(l);
      for (const auto& yi : inv) {
        const std::size_t i = cc_.class_of(z * yi);
        m[i][l] += 1;
      }
    }
    for (auto& row : m) {
      for (auto& x : row) x %= p_;
    }
    matrices_[j] = std::move(m);
    return matrices_[j];
  }

  // Restriction of m to the invariant subspace spanned by the rows of basis
  // (in reduced row echelon form with the given pivots).
  modp::Mat restrict_to(const modp::Mat& m, const modp::Mat& basis,
                        const std::vector<std::size_t>& pivots) const {
    const std::size_t d = basis.size();
    modp::Mat r(d, modp::Vec(d, 0));
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t row = 0; row < d; ++row) {
        const std::size_t i = pivots[row];
        std::uint64_t s = 0;
        for (std::size_t l = 0; l < k_; ++l) s = (s + m[i][l] * basis[c][l]) % p_;
        r[row][c] = s;
      }
    }
    return r;
  }

  std::vector<modp::Vec> central_characters() {
    struct Space {
      modp::Mat basis;
      std::vector<std::size_t> pivots;
    };
    std::vector<Space> todo;
    {
      modp::Mat id(k_, modp::Vec(k_, 0));
      for (std::size_t i = 0; i < k_; ++i) id[i][i] = 1;
      std::vector<std::size_t> piv(k_);
      for (std::size_t i = 0; i < k_; ++i) piv[i] = i;
      todo.push_back({std::move(id), std::move(piv)});
    }
    std::vector<modp::Vec> done;
    std::uniform_int_distribution<std::size_t> pick_class(1, k_ > 1 ? k_ - 1 : 1);
    std::uniform_int_distribution<std::uint64_t> pick_coeff(1, p_ - 1);
    std::size_t failures = 0;
    std::size_t sweep = 1;
    while (!todo.empty()) {
      Space s = std::move(todo.back());
      todo.pop_back();
      if (s.basis.size() == 1) {
        done.push_back(std::move(s.basis[0]));
        continue;
      }
      // combination of class matrices: random, or a deterministic sweep
      // through single matrices after repeated failures
      modp::Mat comb(k_, modp::Vec(k_, 0));
      std::vector<std::pair<std::size_t, std::uint64_t>> parts;
      if (failures < 8) {
        for (int t = 0; t < 2; ++t) parts.emplace_back(pick_class(rng_), pick_coeff(rng_));
      } else {
        parts.emplace_back(sweep, 1);
        sweep = sweep + 1 < k_ ? sweep + 1 : 1;
      }
      for (auto [j, c] : parts) {
        const auto& mj = class_matrix(j);
        for (std::size_t a = 0; a < k_; ++a) {
          for (std::size_t b = 0; b < k_; ++b) comb[a][b] = (comb[a][b] + c * mj[a][b]) % p_;
        }
      }
      modp::Mat r = restrict_to(comb, s.basis, s.pivots);
      const modp::Vec eig = modp::roots(modp::charpoly(r, p_), p_);
      if (eig.size() <= 1) {
        if (++failures > 8 + 4 * k_) throw InternalError("Dixon-Schneider: eigenspaces do not split");
        todo.push_back(std::move(s));
        continue;
      }
      failures = 0;
      std::size_t total = 0;
      for (std::uint64_t lambda : eig) {
        modp::Mat shifted = r;
        for (std::size_t i = 0; i < shifted.size(); ++i) {
          shifted[i][i] = modp::sub(shifted[i][i], lambda, p_);
        }
        modp::Mat ker = modp::nullspace(shifted, p_);
        modp::Mat full;
        for (const auto& x : ker) {
          modp::Vec v(k_, 0);
          for (std::size_t c = 0; c < x.size(); ++c) {
            if (x[c] == 0) continue;
            for (std::size_t l = 0; l < k_; ++l) v[l] = (v[l] + x[c] * s.basis[c][l]) % p_;
          }
          full.push_back(std::move(v));
        }
        total += full.size();
        auto piv = modp::rref(full, p_);
        todo.push_back({std::move(full), std::move(piv)});
      }
      if (total != s.basis.size()) throw InternalError("Dixon-Schneider: class matrix not diagonalizable mod p");
    }
    for (auto& w : done) {
      if (w[0] == 0) throw InternalError("Dixon-Schneider: eigenvector vanishes at identity");
      const std::uint64_t inv = inv_mod(w[0], p_);
      for (auto& x : w) x = x * inv % p_;
    }
    if (done.size() != k_) throw InternalError("Dixon-Schneider: wrong number of characters");
    return done;
  }

  void lift(const modp::Vec& omega, Character& out, modp::Vec& modvals) {
    // |G| / χ(1)^2 = Σ_i ω_i ω_{i*} / |C_i|
    std::uint64_t s = 0;
    const auto& inv = cc_.inverse_map();
    for (std::size_t i = 0; i < k_; ++i) {
      const std::uint64_t hinv = inv_mod(cc_.class_size(i) % p_, p_);
      s = (s + omega[i] * omega[inv[i]] % p_ * hinv) % p_;
    }
    const std::uint64_t d2 = order_ % p_ * inv_mod(s, p_) % p_;
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d * d <= order_; ++d) {
      if (d * d % p_ == d2 && order_ % d == 0) {
        if (degree != 0) throw InternalError("Dixon-Schneider: ambiguous degree");
        degree = d;
      }
    }
    if (degree == 0) throw InternalError("Dixon-Schneider: no valid degree");
    out.degree = degree;
    modvals.assign(k_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
      modvals[i] = omega[i] * (degree % p_) % p_ * inv_mod(cc_.class_size(i) % p_, p_) % p_;
    }
    const std::uint64_t e = cc_.exponent();
    const std::uint64_t z = pow_mod(modp::primitive_root(p_), (p_ - 1) / e, p_);
    out.values.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      const std::uint64_t o = cc_.rep_order(i);
      const std::uint64_t zo = pow_mod(z, e / o, p_);
      const std::uint64_t zo_inv = inv_mod(zo, p_);
      const std::uint64_t o_inv = inv_mod(o % p_, p_);
      std::vector<std::int64_t> mult(o, 0);
      for (std::uint64_t l = 0; l < o; ++l) {
        std::uint64_t acc = 0;
        const std::uint64_t step = pow_mod(zo_inv, l, p_);
        std::uint64_t w = 1;
        for (std::uint64_t t = 0; t < o; ++t) {
          acc = (acc + modvals[cc_.power_map(t)[i]] * w) % p_;
          w = w * step % p_;
        }
        const std::uint64_t m = acc * o_inv % p_;
        if (m > degree) throw InternalError("Dixon-Schneider: eigenvalue multiplicity out of range");
        mult[l] = static_cast<std::int64_t>(m);
      }
      out.values[i] = Cyclotomic::from_integer_coeffs(o, mult);
    }
  }

  const ConjugacyClasses& cc_;
  std::size_t k_;
  std::uint64_t order_;
  std::uint64_t p_;
  std::mt19937_64 rng_;
  std::vector<modp::Mat> matrices_;
};

}  // namespace detail

/// Exact checks of the table invariants; throws InternalError on the first violation.
inline void validate_table(const CharacterTable& t) {
  const auto& cc = t.classes();
  const std::size_t k = cc.size();
  const std::uint64_t n = t.group_order();
  if (t.size() != k) throw InternalError("character count differs from class count");
  mpz_class sum_sq = 0;
  for (std::size_t a = 0; a < k; ++a) {
    const std::uint64_t d = t.degree(a);
    if (n % d != 0) throw InternalError("degree does not divide group order");
    if (t.value(a, 0) != Cyclotomic(static_cast<long>(d))) throw InternalError("value at identity differs from degree");
    sum_sq += d * d;
  }
  if (sum_sq != static_cast<unsigned long>(n)) throw InternalError("sum of squared degrees differs from |G|");

  std::vector<std::vector<Cyclotomic>> conj(k, std::vector<Cyclotomic>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t c = 0; c < k; ++c) conj[a][c] = t.value(a, cc.inverse_map()[c]);
  }
  // row orthogonality: Σ_c |C_c| χ_a(c) conj χ_b(c) = |G| δ_ab
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      Cyclotomic s;
      for (std::size_t c = 0; c < k; ++c) {
        s += (t.value(a, c) * conj[b][c]).scaled(Rational(static_cast<long>(cc.class_size(c))));
      }
      if (s != Cyclotomic(a == b ? static_cast<long>(n) : 0L)) throw InternalError("row orthogonality violated");
    }
  }
  // column orthogonality: Σ_χ χ(c) conj χ(d) = |C_G(g_c)| δ_cd
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = c; d < k; ++d) {
      Cyclotomic s;
      for (std::size_t a = 0; a < k; ++a) s += t.value(a, c) * conj[a][d];
      if (s != Cyclotomic(c == d ? static_cast<long>(cc.centralizer_order(c)) : 0L)) {
        throw InternalError("column orthogonality violated");
      }
    }
  }
}

inline TablePtr character_table(ClassesPtr classes, const TableOptions& opts = {}) {
  detail::DixonSchneider ds(*classes, opts.seed);
  auto chars = ds.run();
  auto t = std::make_shared<const CharacterTable>(std::move(classes), std::move(chars), ds.prime(),
                                                  opts.seed);
  if (opts.validate) validate_table(*t);
  return t;
}

inline TablePtr character_table(const PermGroup& g, const TableOptions& opts = {}) {
  return character_table(conjugacy_classes(g, opts.limits), opts);
}

}  // namespace codeg
