#pragma once

// Exact elements of cyclotomic fields Q(ζ_n).
//
// Canonical form. Write n = Π p^a. An exponent k of ζ_n has, for every prime
// p | n, a "p-coordinate" s_p(k) = k·(n/p^a)^{-1} mod p^a, so that
// ζ_n^k = Π_p ζ_{p^a}^{s_p(k)} with ζ_{p^a} = ζ_n^{n/p^a}. The relation
// Σ_{i<p} ζ_n^{k + i·n/p} = 0 shifts the top base-p digit of s_p(k) through all
// of 0..p-1 while leaving the other coordinates fixed. Eliminating every
// exponent whose top digit is p-1 (for any p) leaves a Q-basis of Q(ζ_n) that
// is also a Z-basis of Z[ζ_n]. With this choice the basis of Q(ζ_d) maps into
// the basis of Q(ζ_n) under ζ_d^j -> ζ_n^{j·n/d}, so a value lies in Q(ζ_d)
// exactly when its support is made of multiples of n/d. Every value is kept
// at its minimal conductor; two values are equal iff their stored forms are.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codeg/error.hpp"
#include "codeg/numtheory.hpp"

namespace codeg {

using Rational = mpq_class;

class Cyclotomic {
 public:
  struct Term {
    std::uint64_t exponent;
    Rational coeff;
    bool operator==(const Term& o) const { return exponent == o.exponent && coeff == o.coeff; }
  };

  Cyclotomic() = default;
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT: implicit by design of a number type
  Cyclotomic(const Rational& v) {                  // NOLINT
    if (v != 0) {
      terms_.push_back({0, v});
      terms_[0].coeff.canonicalize();
    }
  }

  /// ζ_n^k.
  static Cyclotomic root_of_unity(std::uint64_t n, std::int64_t k) {
    if (n == 0) throw InvalidArgument("root_of_unity: n must be positive");
    const auto nn = static_cast<std::int64_t>(n);
    std::vector<Term> t{{static_cast<std::uint64_t>(((k % nn) + nn) % nn), Rational(1)}};
    return from_terms(n, std::move(t));
  }

  /// Σ c·ζ_n^k over arbitrary (possibly repeated, non-reduced) exponents.
  static Cyclotomic from_terms(std::uint64_t n, const std::vector<Term>& terms) {
    if (n == 0) throw InvalidArgument("conductor must be positive");
    auto& buf = scratch(n);
    for (const auto& t : terms) {
      if (t.coeff.get_den() == 1) {
        buf[t.exponent % n] += t.coeff;
      } else {
        Rational c = t.coeff;
        c.canonicalize();
        buf[t.exponent % n] += c;
      }
    }
    return reduce_scratch(n);
  }

  /// Σ_k coeffs[k]·ζ_n^k with integer coefficients.
  static Cyclotomic from_integer_coeffs(std::uint64_t n, const std::vector<std::int64_t>& coeffs) {
    auto& buf = scratch(n);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] != 0) buf[k % n] += static_cast<long>(coeffs[k]);
    }
    return reduce_scratch(n);
  }

  [[nodiscard]] std::uint64_t conductor() const noexcept { return conductor_; }
  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool is_rational() const noexcept { return conductor_ == 1; }
  [[nodiscard]] bool is_integer() const {
    return is_rational() && (terms_.empty() || terms_[0].coeff.get_den() == 1);
  }
  /// Coefficients are all integral, i.e. the value lies in Z[ζ_n].
  [[nodiscard]] bool is_algebraic_integer() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.coeff.get_den() == 1; });
  }

  [[nodiscard]] Rational to_rational() const {
    if (!is_rational()) throw InvalidArgument("cyclotomic value " + to_string() + " is not rational");
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
  }
  [[nodiscard]] mpz_class to_integer() const {
    if (!is_integer()) throw InvalidArgument("cyclotomic value " + to_string() + " is not an integer");
    return terms_.empty() ? mpz_class(0) : mpz_class(terms_[0].coeff.get_num());
  }

  /// Representation in Q(ζ_n) for a multiple n of the conductor.
  [[nodiscard]] std::vector<Term> terms_in(std::uint64_t n) const {
    if (n % conductor_ != 0) throw InvalidArgument("conductor does not divide target");
    const std::uint64_t f = n / conductor_;
    std::vector<Term> out = terms_;
    for (auto& t : out) t.exponent *= f;
    return out;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    const std::uint64_t n = std::lcm(a.conductor_, b.conductor_);
    const std::uint64_t fa = n / a.conductor_, fb = n / b.conductor_;
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    // both inputs are already canonical in Q(ζ_n); merge by exponent
    std::vector<Term> ta = a.terms_, tb = b.terms_;
    for (auto& t : ta) t.exponent *= fa;
    for (auto& t : tb) t.exponent *= fb;
    while (i < ta.size() || j < tb.size()) {
      if (j == tb.size() || (i < ta.size() && ta[i].exponent < tb[j].exponent)) {
        out.push_back(std::move(ta[i++]));
      } else if (i == ta.size() || tb[j].exponent < ta[i].exponent) {
        out.push_back(std::move(tb[j++]));
      } else {
        Rational c = ta[i].coeff + tb[j].coeff;
        if (c != 0) out.push_back({ta[i].exponent, std::move(c)});
        ++i;
        ++j;
      }
    }
    Cyclotomic r;
    r.conductor_ = n;
    r.terms_ = std::move(out);
    r.shrink();
    return r;
  }

  friend Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_rational()) return b.scaled(a.terms_[0].coeff);
    if (b.is_rational()) return a.scaled(b.terms_[0].coeff);
    const std::uint64_t n = std::lcm(a.conductor_, b.conductor_);
    const std::uint64_t fa = n / a.conductor_, fb = n / b.conductor_;
    auto& buf = scratch(n);
    for (const auto& x : a.terms_) {
      const std::uint64_t ex = x.exponent * fa;
      for (const auto& y : b.terms_) {
        const std::uint64_t e = (ex + y.exponent * fb) % n;
        mpq_class& slot = buf[e];
        slot += x.coeff * y.coeff;
      }
    }
    return reduce_scratch(n);
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  [[nodiscard]] Cyclotomic scaled(const Rational& c) const {
    if (c == 0) return {};
    Rational cc = c;
    cc.canonicalize();
    Cyclotomic r = *this;
    for (auto& t : r.terms_) t.coeff *= cc;
    return r;
  }

  /// Image under ζ -> ζ^u, gcd(u, conductor) = 1.
  [[nodiscard]] Cyclotomic galois(std::int64_t u) const {
    const auto n = static_cast<std::int64_t>(conductor_);
    const std::int64_t uu = ((u % n) + n) % n;
    if (std::gcd(uu, n) != 1) throw InvalidArgument("galois: exponent not coprime to conductor");
    if (conductor_ <= 2) return *this;
    auto& buf = scratch(conductor_);
    for (const auto& t : terms_) {
      buf[static_cast<std::uint64_t>(static_cast<std::int64_t>(t.exponent) * uu % n)] += t.coeff;
    }
    return reduce_scratch(conductor_);
  }

  /// Complex conjugate.
  [[nodiscard]] Cyclotomic conj() const { return galois(-1); }

  /// Trace from Q(ζ_n) down to Q, n the conductor.
  [[nodiscard]] Rational galois_trace() const {
    Rational s = 0;
    const std::uint64_t n = conductor_;
    const std::uint64_t phi_n = euler_phi(n);
    for (const auto& t : terms_) {
      const std::uint64_t g = std::gcd(t.exponent, n);
      const std::uint64_t m = n / g;
      // Ramanujan sum c_n(k) = μ(n/g)·φ(n)/φ(n/g)
      const long ram = static_cast<long>(moebius(m)) * static_cast<long>(phi_n / euler_phi(m));
      s += t.coeff * ram;
    }
    return s;
  }

  /// Floating approximation for display only.
  [[nodiscard]] std::complex<double> approx() const {
    std::complex<double> z = 0;
    for (const auto& t : terms_) {
      const double ang = 2.0 * M_PI * static_cast<double>(t.exponent) / static_cast<double>(conductor_);
      z += t.coeff.get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
  }

  bool operator==(const Cyclotomic& o) const {
    return conductor_ == o.conductor_ && terms_ == o.terms_;
  }

  /// A fixed total order on canonical forms (not numeric).
  [[nodiscard]] bool canonical_less(const Cyclotomic& o) const {
    if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
    const std::size_t m = std::min(terms_.size(), o.terms_.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (terms_[i].exponent != o.terms_[i].exponent) return terms_[i].exponent < o.terms_[i].exponent;
      if (terms_[i].coeff != o.terms_[i].coeff) return terms_[i].coeff < o.terms_[i].coeff;
    }
    return terms_.size() < o.terms_.size();
  }

  /// "E(n)^k" notation, e.g. "1-E(3)+2*E(3)^2"; zero prints as "0".
  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      std::string mag;
      Rational c = t.coeff;
      const bool neg = c < 0;
      if (neg) c = -c;
      if (t.exponent == 0) {
        mag = c.get_str();
      } else {
        std::string root = "E(" + std::to_string(conductor_) + ")";
        if (t.exponent != 1) root += "^" + std::to_string(t.exponent);
        mag = (c == 1) ? root : c.get_str() + "*" + root;
      }
      if (neg) {
        out += "-";
      } else if (!out.empty()) {
        out += "+";
      }
      out += mag;
    }
    return out;
  }

  /// Parses the notation produced by to_string (any exponents, repeated terms allowed).
  static Cyclotomic parse(std::string_view s) {
    std::size_t i = 0;
    auto ws = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto number = [&]() -> mpz_class {
      ws();
      const std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start) throw ParseError("expected integer", i);
      return mpz_class(std::string(s.substr(start, i - start)));
    };
    Cyclotomic acc;
    ws();
    if (i == s.size()) throw ParseError("empty cyclotomic", 0);
    bool first = true;
    while (true) {
      ws();
      if (i == s.size()) break;
      bool neg = false;
      if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", i);
      }
      first = false;
      ws();
      Rational coeff = 1;
      bool have_coeff = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        mpz_class num = number();
        mpz_class den = 1;
        ws();
        if (i < s.size() && s[i] == '/') {
          ++i;
          den = number();
          if (den == 0) throw ParseError("zero denominator", i);
        }
        coeff = Rational(num, den);
        coeff.canonicalize();
        have_coeff = true;
        ws();
      }
      Cyclotomic term = coeff;
      const bool star = i < s.size() && s[i] == '*';
      if (star) {
        ++i;
        ws();
      }
      if (i < s.size() && s[i] == 'E') {
        ++i;
        ws();
        if (i >= s.size() || s[i] != '(') throw ParseError("expected '('", i);
        ++i;
        mpz_class n = number();
        ws();
        if (i >= s.size() || s[i] != ')') throw ParseError("expected ')'", i);
        ++i;
        ws();
        mpz_class k = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          k = number();
        }
        if (n == 0 || !n.fits_ulong_p()) throw ParseError("bad root order", i);
        term = root_of_unity(n.get_ui(), static_cast<std::int64_t>(mpz_class(k % n).get_ui())).scaled(coeff);
      } else if (star || !have_coeff) {
        throw ParseError("expected E(n)", i);
      }
      acc += neg ? -term : term;
    }
    return acc;
  }

 private:
  // Dense per-thread accumulator; all entries are zero between calls.
  static std::vector<mpq_class>& scratch(std::uint64_t n) {
    thread_local std::vector<mpq_class> buf;
    if (buf.size() < n) buf.resize(n);
    return buf;
  }

  struct PrimeData {
    std::uint64_t p, pa, top, inv, step;
  };

  static std::vector<PrimeData> prime_data(std::uint64_t n) {
    std::vector<PrimeData> out;
    for (auto [p, a] : factorize(n)) {
      std::uint64_t pa = 1;
      for (unsigned i = 0; i < a; ++i) pa *= p;
      const std::uint64_t rest = n / pa;
      const std::uint64_t inv = pa == 1 ? 0 : inv_mod_general(static_cast<std::int64_t>(rest % pa),
                                                             static_cast<std::int64_t>(pa));
      out.push_back({p, pa, pa / p, inv, n / p});
    }
    return out;
  }

  // Reduces scratch[0..n) to canonical form, clears it and returns the value.
  static Cyclotomic reduce_scratch(std::uint64_t n) {
    auto& buf = scratch(n);
    if (n > 1) {
      for (const auto& pd : prime_data(n)) {
        for (std::uint64_t k = 0; k < n; ++k) {
          if (buf[k] == 0) continue;
          const std::uint64_t s = (k % pd.pa) * pd.inv % pd.pa;
          if (s / pd.top != pd.p - 1) continue;
          for (std::uint64_t i = 1; i < pd.p; ++i) buf[(k + n - i * pd.step % n) % n] -= buf[k];
          buf[k] = 0;
        }
      }
    }
    Cyclotomic r;
    r.conductor_ = n;
    for (std::uint64_t k = 0; k < n; ++k) {
      if (buf[k] != 0) {
        r.terms_.push_back({k, buf[k]});
        buf[k] = 0;
      }
    }
    r.shrink();
    return r;
  }

  void shrink() {
    if (terms_.empty()) {
      conductor_ = 1;
      return;
    }
    std::uint64_t g = conductor_;
    for (const auto& t : terms_) g = std::gcd(g, t.exponent);
    if (g > 1) {
      conductor_ /= g;
      for (auto& t : terms_) t.exponent /= g;
    }
  }

  std::uint64_t conductor_ = 1;
  std::vector<Term> terms_;
};

inline std::string to_string(const Cyclotomic& x) { return x.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

}  // namespace codeg
