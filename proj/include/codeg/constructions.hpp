#pragma once

// Named groups as permutation groups: symmetric, cyclic, dihedral, quaternion,
// linear groups over prime fields and their affine extensions.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "codeg/finite_field.hpp"
#include "codeg/modp.hpp"
#include "codeg/subgroups.hpp"

namespace codeg {

inline PermGroup trivial_group() { return PermGroup(1, {}); }

inline PermGroup symmetric(std::size_t m) {
  if (m == 0) throw InvalidArgument("symmetric: degree must be positive");
  if (m == 1) return trivial_group();
  std::vector<Point> cyc(m);
  for (std::size_t i = 0; i < m; ++i) cyc[i] = static_cast<Point>(i);
  return PermGroup(m, {Permutation::from_cycles(m, {{0, 1}}), Permutation::from_cycles(m, {cyc})});
}

inline PermGroup alternating(std::size_t m) {
  if (m == 0) throw InvalidArgument("alternating: degree must be positive");
  if (m < 3) return trivial_group();
  std::vector<Point> cyc;
  for (std::size_t i = m % 2 ? 0 : 1; i < m; ++i) cyc.push_back(static_cast<Point>(i));
  return PermGroup(m, {Permutation::from_cycles(m, {{0, 1, 2}}), Permutation::from_cycles(m, {cyc})});
}

inline PermGroup cyclic(std::size_t m) {
  if (m == 0) throw InvalidArgument("cyclic: order must be positive");
  if (m == 1) return trivial_group();
  std::vector<Point> cyc(m);
  for (std::size_t i = 0; i < m; ++i) cyc[i] = static_cast<Point>(i);
  return PermGroup(m, {Permutation::from_cycles(m, {cyc})});
}

/// Dihedral group of order 2m acting on the vertices of an m-gon.
inline PermGroup dihedral(std::size_t m) {
  if (m < 3) throw InvalidArgument("dihedral: polygon needs at least 3 vertices");
  std::vector<Point> rot(m), refl(m);
  for (std::size_t i = 0; i < m; ++i) {
    rot[i] = static_cast<Point>((i + 1) % m);
    refl[i] = static_cast<Point>((m - i) % m);
  }
  return PermGroup(m, {Permutation(rot), Permutation(refl)});
}

/// Q_{2^n} = <x, y | x^{2^{n-1}}, y^2 = x^{2^{n-2}}, y x y^-1 = x^-1> in its
/// regular representation; element x^a y^b is point a + b·2^{n-1}.
inline PermGroup generalized_quaternion(std::uint64_t order) {
  if (order < 8 || (order & (order - 1)) != 0) throw InvalidArgument("generalized quaternion order must be 2^n, n >= 3");
  const std::size_t m = order / 2;
  std::vector<Point> x(order), y(order);
  for (std::size_t a = 0; a < m; ++a) {
    x[a] = static_cast<Point>((a + 1) % m);
    x[a + m] = static_cast<Point>((a + 1) % m + m);
    y[a] = static_cast<Point>((m - a) % m + m);
    y[a + m] = static_cast<Point>((m - a + m / 2) % m);
  }
  return PermGroup(order, {Permutation(x), Permutation(y)});
}

struct MatrixGroupSpec {
  std::uint64_t p = 2;
  std::size_t d = 1;
  std::vector<Matrix> gens;

  void validate() const {
    if (!is_prime(p)) throw InvalidArgument("matrix group: modulus must be prime");
    if (d == 0) throw InvalidArgument("matrix group: dimension must be positive");
    for (const auto& m : gens) {
      if (m.dim() != d || m.prime() != p) throw InvalidArgument("matrix group: generator has the wrong shape");
      if (m.determinant() == 0) throw InvalidArgument("matrix group: singular generator " + m.to_string());
    }
  }
  [[nodiscard]] std::uint64_t space_size() const { return int_pow(p, d); }
};

inline std::uint64_t checked_space_size(std::uint64_t p, std::size_t d, const Limits& limits) {
  std::uint64_t q = 1;
  for (std::size_t i = 0; i < d; ++i) {
    q *= p;
    if (q > limits.degree_cap) {
      throw CapExceeded("vector space of size " + std::to_string(p) + "^" + std::to_string(d) +
                        " exceeds degree cap " + std::to_string(limits.degree_cap));
    }
  }
  return q;
}

inline Permutation matrix_permutation(const Matrix& m, std::uint64_t q) {
  std::vector<Point> img(q);
  for (std::uint64_t v = 0; v < q; ++v) img[v] = static_cast<Point>(m.apply(v));
  return Permutation(std::move(img));
}

/// The action v -> Mv on the p^d vectors of F_p^d.
inline PermGroup matrix_to_perm(const MatrixGroupSpec& spec, const Limits& limits = {}) {
  spec.validate();
  const std::uint64_t q = checked_space_size(spec.p, spec.d, limits);
  std::vector<Permutation> gens;
  for (const auto& m : spec.gens) gens.push_back(matrix_permutation(m, q));
  return PermGroup(q, std::move(gens));
}

/// Generators replaced by their inverse transposes.
inline MatrixGroupSpec dual_action(const MatrixGroupSpec& spec) {
  spec.validate();
  MatrixGroupSpec out{spec.p, spec.d, {}};
  for (const auto& m : spec.gens) out.gens.push_back(m.inverse().transpose());
  return out;
}

struct AffineGroupSpec {
  MatrixGroupSpec linear;
  PermGroup group;
  PermGroup translations;
};

/// V ⋊ H on the vectors of V, generated by H and the basis translations.
inline AffineGroupSpec affine(const MatrixGroupSpec& spec, const Limits& limits = {}) {
  spec.validate();
  const std::uint64_t q = checked_space_size(spec.p, spec.d, limits);
  std::vector<Permutation> trans;
  for (std::size_t i = 0; i < spec.d; ++i) {
    const std::uint64_t e = int_pow(spec.p, i);
    std::vector<Point> img(q);
    for (std::uint64_t v = 0; v < q; ++v) {
      // add e coordinate-wise: only digit i changes
      const std::uint64_t digit = (v / e) % spec.p;
      img[v] = static_cast<Point>(v - digit * e + ((digit + 1) % spec.p) * e);
    }
    trans.emplace_back(std::move(img));
  }
  std::vector<Permutation> gens = trans;
  for (const auto& m : spec.gens) gens.push_back(matrix_permutation(m, q));
  AffineGroupSpec out{spec, PermGroup(q, std::move(gens)), PermGroup(q, std::move(trans))};
  if (!is_normal(out.translations, out.group)) throw InternalError("affine: translations are not normal");
  return out;
}

inline PermGroup elementary_abelian(std::uint64_t p, std::size_t d, const Limits& limits = {}) {
  if (d == 0) throw InvalidArgument("elementary abelian: rank must be positive");
  return affine(MatrixGroupSpec{p, d, {}}, limits).group;
}

/// Γ(p^d) = {x -> a x^σ} as F_p-linear maps of F_{p^d}.
inline MatrixGroupSpec gamma_semilinear_spec(std::uint64_t p, std::size_t d, const Limits& limits = {}) {
  checked_space_size(p, d, limits);
  const FiniteField f(p, d);
  MatrixGroupSpec spec{p, d, {f.multiplication_matrix(f.primitive_element())}};
  if (d > 1) spec.gens.push_back(f.frobenius_matrix());
  return spec;
}

inline PermGroup gamma_semilinear(std::uint64_t p, std::size_t d, const Limits& limits = {}) {
  return matrix_to_perm(gamma_semilinear_spec(p, d, limits), limits);
}

/// Monomial matrices of determinant ±1 in GL(2, p^{d/2}), written over F_p.
inline MatrixGroupSpec monomial_pm1_spec(std::uint64_t p, std::size_t d, const Limits& limits = {}) {
  if (p == 2) throw InvalidArgument("monomial group needs an odd prime");
  if (d == 0 || d % 2 != 0) throw InvalidArgument("monomial group needs an even dimension");
  checked_space_size(p, d, limits);
  const std::size_t h = d / 2;
  const FiniteField f(p, h);
  const Matrix a = f.multiplication_matrix(f.primitive_element());
  const Matrix ainv = a.inverse();
  const Matrix one = Matrix::identity(h, p);
  const Matrix minus_one = f.multiplication_matrix(f.neg(1));
  const Matrix zero(h, p);
  auto block = [&](const Matrix& tl, const Matrix& tr, const Matrix& bl, const Matrix& br) {
    Matrix m(d, p);
    for (std::size_t i = 0; i < h; ++i) {
      for (std::size_t j = 0; j < h; ++j) {
        m(i, j) = tl(i, j);
        m(i, j + h) = tr(i, j);
        m(i + h, j) = bl(i, j);
        m(i + h, j + h) = br(i, j);
      }
    }
    return m;
  };
  return MatrixGroupSpec{p, d, {block(a, zero, zero, ainv), block(one, zero, zero, minus_one), block(zero, one, one, zero)}};
}

inline PermGroup monomial_pm1(std::uint64_t p, std::size_t d, const Limits& limits = {}) {
  return matrix_to_perm(monomial_pm1_spec(p, d, limits), limits);
}

inline MatrixGroupSpec gl_spec(std::uint64_t p) {
  const auto g = static_cast<std::int64_t>(p == 2 ? 1 : modp::primitive_root(p));
  return MatrixGroupSpec{p, 2, {Matrix(2, p, {1, 1, 0, 1}), Matrix(2, p, {1, 0, 1, 1}), Matrix(2, p, {g, 0, 0, 1})}};
}

inline MatrixGroupSpec gl23_spec() { return gl_spec(3); }
inline MatrixGroupSpec sl23_spec() { return MatrixGroupSpec{3, 2, {Matrix(2, 3, {1, 1, 0, 1}), Matrix(2, 3, {1, 0, 1, 1})}}; }

/// The binary octahedral group inside SL(2,7): quaternion units i, j, an
/// element of order 3 permuting them and an element of order 8.
inline MatrixGroupSpec csu23_spec() {
  return MatrixGroupSpec{7, 2, {Matrix(2, 7, {0, 6, 1, 0}), Matrix(2, 7, {2, 3, 3, 5}), Matrix(2, 7, {6, 2, 3, 0}),
                                Matrix(2, 7, {5, 2, 5, 5})}};
}

inline std::size_t count_involutions(const PermGroup& g, const Limits& limits = {}) {
  std::size_t n = 0;
  for (const auto& x : g.elements(limits)) n += x.order() == 2;
  return n;
}

inline PermGroup gl23(const Limits& limits = {}) {
  PermGroup g = matrix_to_perm(gl23_spec(), limits);
  if (g.order_u64() != 48) throw InternalError("GL(2,3) has the wrong order");
  return g;
}

/// CSU(2,3) acting on F_7^2, checked against its defining invariants.
inline PermGroup csu23(const Limits& limits = {}) {
  PermGroup g = matrix_to_perm(csu23_spec(), limits);
  if (g.order_u64() != 48) throw InternalError("CSU(2,3) has the wrong order");
  if (count_involutions(g, limits) != 1) throw InternalError("CSU(2,3) must have a unique involution");
  const PermGroup p = sylow(g, 2, limits).group();
  if (p.order_u64() != 16 || count_involutions(p, limits) != 1) {
    throw InternalError("CSU(2,3) Sylow 2-subgroup is not generalized quaternion");
  }
  return g;
}

}  // namespace codeg
