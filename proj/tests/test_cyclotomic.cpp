#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "codeg/cyclotomic.hpp"

using codeg::Cyclotomic;
using codeg::Rational;

namespace {

using Poly = std::vector<mpq_class>;  // coefficient of x^i at index i

Poly poly_mod(Poly a, const Poly& m) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const mpq_class lead = a.back() / m.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] -= lead * m[i];
    a.pop_back();
  }
  return a;
}

Poly poly_div_exact(Poly a, const Poly& m) {
  const std::size_t dm = m.size() - 1;
  Poly q(a.size() - dm);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = a[k + dm] / m.back();
    for (std::size_t i = 0; i <= dm; ++i) a[k + i] -= q[k] * m[i];
  }
  return q;
}

// The n-th cyclotomic polynomial from x^n - 1 = Π_{d|n} Φ_d.
Poly cyclotomic_poly(std::uint64_t n) {
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_div_exact(p, cyclotomic_poly(d));
  }
  return p;
}

// Zero test through the minimal polynomial of ζ_n, independent of any basis choice.
bool oracle_is_zero(std::uint64_t n, const std::vector<mpq_class>& coeffs) {
  Poly r = poly_mod(coeffs, cyclotomic_poly(n));
  for (const auto& c : r) {
    if (c != 0) return false;
  }
  return true;
}

struct Sample {
  std::uint64_t n;
  std::vector<mpq_class> coeffs;  // length n
  Cyclotomic value;
};

Sample random_sample(std::mt19937_64& rng, std::uint64_t n) {
  std::uniform_int_distribution<int> c(-3, 3), sparse(0, 2);
  Sample s{n, std::vector<mpq_class>(n), {}};
  std::vector<Cyclotomic::Term> terms;
  for (std::uint64_t k = 0; k < n; ++k) {
    if (sparse(rng) != 0) continue;
    s.coeffs[k] = mpq_class(c(rng), 1 + sparse(rng));
    s.coeffs[k].canonicalize();
    terms.push_back({k, s.coeffs[k]});
  }
  s.value = Cyclotomic::from_terms(n, terms);
  return s;
}

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

const std::uint64_t kConductors[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 21, 24, 30, 36};

}  // namespace

TEST(Cyclotomic, RootsOfUnitySumToZero) {
  for (std::uint64_t n = 2; n <= 40; ++n) {
    Cyclotomic s;
    for (std::uint64_t k = 0; k < n; ++k) s += Cyclotomic::root_of_unity(n, static_cast<std::int64_t>(k));
    EXPECT_TRUE(s.is_zero()) << n;
  }
}

TEST(Cyclotomic, MinimalConductorIsKept) {
  EXPECT_EQ(Cyclotomic::root_of_unity(4, 2), Cyclotomic(-1));
  EXPECT_TRUE(Cyclotomic::root_of_unity(4, 2).is_rational());
  EXPECT_EQ(Cyclotomic::root_of_unity(12, 4).conductor(), 3u);
  EXPECT_EQ(Cyclotomic::root_of_unity(6, 1), -Cyclotomic::root_of_unity(3, 2));
  EXPECT_EQ(Cyclotomic::root_of_unity(2, 1), Cyclotomic(-1));
  const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  EXPECT_EQ((i * i).conductor(), 1u);
  // sqrt(-3) = E(3) - E(3)^2
  const Cyclotomic r = Cyclotomic::root_of_unity(3, 1) - Cyclotomic::root_of_unity(3, 2);
  EXPECT_EQ(r * r, Cyclotomic(-3));
}

TEST(Cyclotomic, CanonicalFormIsNotation) {
  EXPECT_EQ(Cyclotomic().to_string(), "0");
  EXPECT_EQ(Cyclotomic(5).to_string(), "5");
  EXPECT_EQ(Cyclotomic(Rational(-1, 2)).to_string(), "-1/2");
  EXPECT_EQ(Cyclotomic::root_of_unity(3, 1).to_string(), "E(3)");
  EXPECT_EQ(Cyclotomic::parse("E(3)+E(3)^2").to_string(), "-1");
  EXPECT_EQ(Cyclotomic::parse("E(6)^2").to_string(), "E(3)");
  EXPECT_EQ(Cyclotomic::parse("-E(3)^2"), Cyclotomic::parse("1+E(3)"));
}

TEST(Cyclotomic, ParseAcceptsLooseForms) {
  EXPECT_EQ(Cyclotomic::parse(" 1/2*E(5) + 3 "), Cyclotomic::root_of_unity(5, 1).scaled(Rational(1, 2)) + Cyclotomic(3));
  EXPECT_EQ(Cyclotomic::parse("2E(4)"), Cyclotomic::root_of_unity(4, 1).scaled(2));
  EXPECT_EQ(Cyclotomic::parse("E(8)^9"), Cyclotomic::root_of_unity(8, 1));
  EXPECT_EQ(Cyclotomic::parse("-7"), Cyclotomic(-7));
}

TEST(Cyclotomic, ParseErrorsCarryPositions) {
  const char* bad[] = {"", "E(", "E(0)", "1/0", "E(3)E(3)", "2*", "x", "E(3)^"};
  for (const char* s : bad) EXPECT_THROW((void)Cyclotomic::parse(s), codeg::ParseError) << s;
  try {
    (void)Cyclotomic::parse("1+E(3)*");
    FAIL();
  } catch (const codeg::ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(Cyclotomic, ZeroTestAgreesWithMinimalPolynomial) {
  std::mt19937_64 rng(11);
  for (std::uint64_t n : kConductors) {
    for (int trial = 0; trial < 20; ++trial) {
      Sample s = random_sample(rng, n);
      EXPECT_EQ(s.value.is_zero(), oracle_is_zero(n, s.coeffs)) << n;
      // force a zero element by adding a multiple of Φ_n
      const Poly phi = cyclotomic_poly(n);
      std::vector<Cyclotomic::Term> terms;
      for (std::size_t k = 0; k < phi.size(); ++k) terms.push_back({k + static_cast<std::uint64_t>(trial) % n, phi[k] * 3});
      EXPECT_TRUE(Cyclotomic::from_terms(n, terms).is_zero()) << n;
    }
  }
}

TEST(Cyclotomic, EqualityAgreesWithMinimalPolynomial) {
  std::mt19937_64 rng(12);
  for (std::uint64_t n : kConductors) {
    for (int trial = 0; trial < 20; ++trial) {
      Sample a = random_sample(rng, n), b = random_sample(rng, n);
      std::vector<mpq_class> diff(n);
      for (std::uint64_t k = 0; k < n; ++k) diff[k] = a.coeffs[k] - b.coeffs[k];
      EXPECT_EQ(a.value == b.value, oracle_is_zero(n, diff));
    }
  }
}

TEST(Cyclotomic, FieldOperationsMatchComplexArithmetic) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kConductors) - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const Sample a = random_sample(rng, kConductors[pick(rng)]);
    const Sample b = random_sample(rng, kConductors[pick(rng)]);
    EXPECT_TRUE(near((a.value + b.value).approx(), a.value.approx() + b.value.approx()));
    EXPECT_TRUE(near((a.value * b.value).approx(), a.value.approx() * b.value.approx()));
    EXPECT_TRUE(near((a.value - b.value).approx(), a.value.approx() - b.value.approx()));
    EXPECT_TRUE(near(a.value.conj().approx(), std::conj(a.value.approx())));
    EXPECT_EQ(a.value + b.value - b.value, a.value);
    EXPECT_EQ(a.value * b.value, b.value * a.value);
  }
}

TEST(Cyclotomic, RingAxiomsHoldExactly) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const Sample a = random_sample(rng, 12), b = random_sample(rng, 15), c = random_sample(rng, 8);
    EXPECT_EQ((a.value * b.value) * c.value, a.value * (b.value * c.value));
    EXPECT_EQ(a.value * (b.value + c.value), a.value * b.value + a.value * c.value);
    EXPECT_EQ(a.value - a.value, Cyclotomic());
  }
}

TEST(Cyclotomic, GaloisActsAsFieldAutomorphism) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const Sample a = random_sample(rng, 20), b = random_sample(rng, 20);
    for (std::int64_t u : {1, 3, 7, 9, 11, 13, 17, 19}) {
      if (a.value.conductor() > 1 && std::gcd<std::int64_t>(u, static_cast<std::int64_t>(a.value.conductor())) != 1) continue;
      if (b.value.conductor() > 1 && std::gcd<std::int64_t>(u, static_cast<std::int64_t>(b.value.conductor())) != 1) continue;
      const Cyclotomic s = a.value + b.value, p = a.value * b.value;
      if (std::gcd<std::int64_t>(u, static_cast<std::int64_t>(s.conductor())) == 1) {
        EXPECT_EQ(s.galois(u), a.value.galois(u) + b.value.galois(u));
      }
      if (std::gcd<std::int64_t>(u, static_cast<std::int64_t>(p.conductor())) == 1) {
        EXPECT_EQ(p.galois(u), a.value.galois(u) * b.value.galois(u));
      }
    }
  }
  EXPECT_THROW((void)Cyclotomic::root_of_unity(6, 1).galois(3), codeg::InvalidArgument);
}

TEST(Cyclotomic, TraceSumsConjugates) {
  std::mt19937_64 rng(16);
  for (std::uint64_t n : kConductors) {
    const Sample a = random_sample(rng, n);
    const std::uint64_t m = a.value.conductor();
    Cyclotomic sum;
    for (std::uint64_t u = 1; u <= m; ++u) {
      if (std::gcd(u, m) == 1) sum += a.value.galois(static_cast<std::int64_t>(u));
    }
    ASSERT_TRUE(sum.is_rational());
    EXPECT_EQ(sum.to_rational(), a.value.galois_trace()) << a.value.to_string();
  }
}

TEST(Cyclotomic, StringRoundTrip) {
  std::mt19937_64 rng(17);
  for (std::uint64_t n : kConductors) {
    for (int trial = 0; trial < 10; ++trial) {
      const Sample a = random_sample(rng, n);
      EXPECT_EQ(Cyclotomic::parse(a.value.to_string()), a.value) << a.value.to_string();
    }
  }
}

TEST(Cyclotomic, IntegralityPredicates) {
  EXPECT_TRUE(Cyclotomic(3).is_integer());
  EXPECT_FALSE(Cyclotomic(Rational(3, 2)).is_integer());
  EXPECT_TRUE(Cyclotomic::parse("2*E(5)-E(5)^3").is_algebraic_integer());
  EXPECT_FALSE(Cyclotomic::parse("1/3*E(7)").is_algebraic_integer());
  EXPECT_EQ(Cyclotomic(-4).to_integer(), -4);
}
