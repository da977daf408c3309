#pragma once

// Permutations on {0, ..., n-1}.
//
// Composition convention: (p * q)(i) = p(q(i)), i.e. apply q first, then p.
// Points are 0-based internally and 1-based in cycle notation.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codeg/error.hpp"

namespace codeg {

using Point = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// Takes ownership of an image array; throws unless it is a bijection.
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x]) {
        throw InvalidArgument("image array is not a bijection");
      }
      seen[x] = true;
    }
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds a permutation from 0-based cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        Point a = cyc[i];
        if (a >= degree) throw InvalidArgument("cycle point out of range");
        if (used[a]) throw InvalidArgument("point repeated across cycles");
        used[a] = true;
        img[a] = cyc[(i + 1) % cyc.size()];
      }
    }
    return Permutation(std::move(img));
  }

  [[nodiscard]] std::size_t degree() const noexcept { return images_.size(); }
  [[nodiscard]] Point operator()(Point i) const { return images_[i]; }
  [[nodiscard]] std::span<const Point> images() const noexcept { return images_; }

  [[nodiscard]] bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  [[nodiscard]] Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  /// First point moved, or degree() when identity.
  [[nodiscard]] std::size_t first_moved() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return i;
    }
    return images_.size();
  }

  /// Cycle lengths (including fixed points) in non-increasing order.
  [[nodiscard]] std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lens;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
  }

  /// Order of the element (lcm of cycle lengths). Throws on 64-bit overflow.
  [[nodiscard]] std::uint64_t order() const {
    std::uint64_t o = 1;
    for (std::size_t len : cycle_type()) {
      std::uint64_t g = std::gcd(o, static_cast<std::uint64_t>(len));
      std::uint64_t f = len / g;
      if (o > UINT64_MAX / f) throw CapExceeded("element order overflows 64 bits");
      o *= f;
    }
    return o;
  }

  /// p^e for any integer e (negative exponents use the inverse).
  [[nodiscard]] Permutation pow(std::int64_t e) const {
    const std::size_t n = images_.size();
    std::vector<Point> out(n);
    std::vector<bool> seen(n, false);
    std::vector<Point> cyc;
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i]) continue;
      cyc.clear();
      for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
        seen[j] = true;
        cyc.push_back(j);
      }
      const auto len = static_cast<std::int64_t>(cyc.size());
      const std::int64_t shift = ((e % len) + len) % len;
      for (std::int64_t k = 0; k < len; ++k) {
        out[cyc[k]] = cyc[(k + shift) % len];
      }
    }
    Permutation r;
    r.images_ = std::move(out);
    return r;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw InvalidArgument("degree mismatch in composition");
    Permutation r;
    r.images_.resize(p.degree());
    for (std::size_t i = 0; i < q.images_.size(); ++i) r.images_[i] = p.images_[q.images_[i]];
    return r;
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

/// (p ∘ q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

/// g h g^-1.
inline Permutation conjugate(const Permutation& h, const Permutation& g) {
  return g * h * g.inverse();
}

/// a^-1 b^-1 a b.
inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

/// 1-based cycle notation, identity prints as "()".
inline std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(static_cast<Point>(i)) == i) continue;
    out += '(';
    bool first = true;
    for (Point j = static_cast<Point>(i); !seen[j]; j = p(j)) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Parses 1-based cycle notation such as "(1,2)(3,4,5)". Whitespace is ignored.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<Point> cyc;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      const std::size_t start = i;
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > degree) throw ParseError("point exceeds degree", start);
        ++i;
      }
      if (i == start) throw ParseError("expected point", i);
      if (v == 0) throw ParseError("points are 1-based", start);
      if (std::find(cyc.begin(), cyc.end(), v - 1) != cyc.end()) {
        throw ParseError("point repeated in cycle", start);
      }
      cyc.push_back(static_cast<Point>(v - 1));
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ')'", i);
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace codeg
