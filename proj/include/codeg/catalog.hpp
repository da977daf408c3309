#pragma once

// Registry of named groups and the textual group-spec grammar:
//   name:<catalog name>
//   perm:<degree>:<cycles>;<cycles>;...
//   mat:p=<p>,d=<d>:<entries>;<entries>;...   (d*d comma-separated entries per matrix, row-major)
//   affine:p=<p>,d=<d>:<entries>;...

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codeg/constructions.hpp"

namespace codeg {

struct CatalogEntry {
  std::string name;
  std::function<PermGroup(const Limits&)> build;
  /// Set for linear groups: the group is this spec acting on F_p^d.
  std::optional<MatrixGroupSpec> matrix;
  /// Set for affine groups V ⋊ H: the linear part H.
  std::optional<MatrixGroupSpec> affine_of;
};

namespace detail {

inline std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  auto plain = [&](std::string name, std::function<PermGroup()> f) {
    c.push_back({std::move(name), [f](const Limits&) { return f(); }, std::nullopt, std::nullopt});
  };
  auto linear = [&](std::string name, MatrixGroupSpec spec) {
    c.push_back({name, [spec](const Limits& l) { return matrix_to_perm(spec, l); }, spec, std::nullopt});
  };
  auto affine_of = [&](const std::string& name, MatrixGroupSpec spec) {
    c.push_back({"Aff(" + name + ")", [spec](const Limits& l) { return affine(spec, l).group; }, std::nullopt, spec});
  };

  for (std::size_t m = 2; m <= 12; ++m) plain("C" + std::to_string(m), [m] { return cyclic(m); });
  plain("S3", [] { return symmetric(3); });
  plain("S4", [] { return symmetric(4); });
  plain("D4", [] { return dihedral(4); });
  plain("D5", [] { return dihedral(5); });
  plain("D6", [] { return dihedral(6); });
  plain("Q8", [] { return generalized_quaternion(8); });
  plain("Q16", [] { return generalized_quaternion(16); });
  plain("A4", [] { return alternating(4); });
  plain("C2^2", [] { return elementary_abelian(2, 2); });
  plain("C2^3", [] { return elementary_abelian(2, 3); });
  plain("C3^2", [] { return elementary_abelian(3, 2); });

  const std::vector<std::pair<std::string, MatrixGroupSpec>> lin = {
      {"GL(2,2)", gl_spec(2)},
      {"SL(2,3)", sl23_spec()},
      {"GL(2,3)", gl23_spec()},
      {"CSU(2,3)", csu23_spec()},
      {"Gamma(2^3)", gamma_semilinear_spec(2, 3)},
      {"Gamma(3^2)", gamma_semilinear_spec(3, 2)},
      {"Gamma(5^2)", gamma_semilinear_spec(5, 2)},
      {"Mono(3,2)", monomial_pm1_spec(3, 2)},
      {"Mono(5,2)", monomial_pm1_spec(5, 2)},
  };
  for (const auto& [name, spec] : lin) linear(name, spec);
  for (const auto& [name, spec] : lin) affine_of(name, spec);

  plain("A5", [] { return alternating(5); });
  plain("S5", [] { return symmetric(5); });
  return c;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::make_catalog();
  return entries;
}

inline const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

/// Entries selected by a filter: "all", or a comma-separated list of names.
inline std::vector<const CatalogEntry*> select_catalog(std::string_view filter) {
  std::vector<const CatalogEntry*> out;
  if (filter == "all") {
    for (const auto& e : catalog()) out.push_back(&e);
    return out;
  }
  // names contain commas themselves, so match greedily against the registry
  std::size_t i = 0;
  while (i < filter.size()) {
    const CatalogEntry* best = nullptr;
    for (const auto& e : catalog()) {
      if (filter.substr(i, e.name.size()) == e.name &&
          (i + e.name.size() == filter.size() || filter[i + e.name.size()] == ',') &&
          (!best || e.name.size() > best->name.size())) {
        best = &e;
      }
    }
    if (!best) throw InvalidArgument("unknown catalog group in filter: " + std::string(filter.substr(i)));
    out.push_back(best);
    i += best->name.size() + 1;
  }
  return out;
}

struct ParsedGroup {
  std::string name;
  PermGroup group;
  std::optional<MatrixGroupSpec> matrix;
  std::optional<MatrixGroupSpec> affine_of;
};

namespace detail {

inline std::uint64_t parse_uint(std::string_view s, std::size_t& i, std::size_t base) {
  const std::size_t start = i;
  std::uint64_t v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
    if (v > (1ULL << 40)) throw ParseError("number too large", base + start);
    ++i;
  }
  if (i == start) throw ParseError("expected a number", base + i);
  return v;
}

inline void expect(std::string_view s, std::size_t& i, std::string_view lit, std::size_t base) {
  if (s.substr(i, lit.size()) != lit) throw ParseError("expected '" + std::string(lit) + "'", base + i);
  i += lit.size();
}

inline MatrixGroupSpec parse_matrix_spec(std::string_view s, std::size_t base) {
  std::size_t i = 0;
  expect(s, i, "p=", base);
  const std::uint64_t p = parse_uint(s, i, base);
  if (!is_prime(p)) throw ParseError("p must be prime", base + 2);
  expect(s, i, ",d=", base);
  const std::size_t dpos = i;
  const std::size_t d = parse_uint(s, i, base);
  if (d == 0 || d > 16) throw ParseError("d must be between 1 and 16", base + dpos);
  expect(s, i, ":", base);
  MatrixGroupSpec spec{p, d, {}};
  while (i < s.size()) {
    const std::size_t mstart = i;
    std::vector<std::int64_t> entries;
    while (true) {
      bool neg = false;
      if (i < s.size() && s[i] == '-') {
        neg = true;
        ++i;
      }
      const auto v = static_cast<std::int64_t>(parse_uint(s, i, base));
      entries.push_back(neg ? -v : v);
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    if (entries.size() != d * d) {
      throw ParseError("matrix needs " + std::to_string(d * d) + " entries, got " + std::to_string(entries.size()),
                       base + mstart);
    }
    Matrix m(d, p, entries);
    if (m.determinant() == 0) throw ParseError("singular matrix", base + mstart);
    spec.gens.push_back(std::move(m));
    if (i < s.size()) expect(s, i, ";", base);
  }
  return spec;
}

}  // namespace detail

inline ParsedGroup parse_group_spec(std::string_view text, const Limits& limits = {}) {
  const std::string name(text);
  if (text.starts_with("name:")) {
    const auto* e = find_catalog_entry(text.substr(5));
    if (!e) throw ParseError("unknown catalog group '" + std::string(text.substr(5)) + "'", 5);
    return {e->name, e->build(limits), e->matrix, e->affine_of};
  }
  if (text.starts_with("perm:")) {
    std::size_t i = 5;
    const std::size_t degree = detail::parse_uint(text, i, 0);
    if (degree == 0) throw ParseError("degree must be positive", 5);
    if (degree > limits.degree_cap) throw CapExceeded("degree " + std::to_string(degree) + " exceeds degree cap");
    detail::expect(text, i, ":", 0);
    std::vector<Permutation> gens;
    while (i < text.size()) {
      std::size_t end = text.find(';', i);
      if (end == std::string_view::npos) end = text.size();
      try {
        gens.push_back(parse_cycles(text.substr(i, end - i), degree));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), i + e.position());
      }
      i = end + (end < text.size() ? 1 : 0);
    }
    return {name, PermGroup(degree, std::move(gens)), std::nullopt, std::nullopt};
  }
  if (text.starts_with("mat:")) {
    auto spec = detail::parse_matrix_spec(text.substr(4), 4);
    return {name, matrix_to_perm(spec, limits), spec, std::nullopt};
  }
  if (text.starts_with("affine:")) {
    auto spec = detail::parse_matrix_spec(text.substr(7), 7);
    return {name, affine(spec, limits).group, std::nullopt, spec};
  }
  throw ParseError("group spec must start with name:, perm:, mat: or affine:", 0);
}

}  // namespace codeg
