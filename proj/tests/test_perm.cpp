#include <random>
#include <set>

#include <gtest/gtest.h>

#include "codeg/classes.hpp"
#include "codeg/constructions.hpp"
#include "oracles.hpp"

using namespace codeg;

namespace {

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

}  // namespace

TEST(Permutation, CompositionAppliesRightFactorFirst) {
  const auto p = parse_cycles("(1,2)", 3);
  const auto q = parse_cycles("(2,3)", 3);
  // (p*q)(i) = p(q(i)): 1 -> 1 -> 2
  EXPECT_EQ((p * q)(0), 1u);
  EXPECT_EQ(to_cycle_string(p * q), "(1,2,3)");
  EXPECT_EQ(to_cycle_string(q * p), "(1,3,2)");
}

TEST(Permutation, InverseOrderPowers) {
  const auto p = parse_cycles("(1,2,3)(4,5)", 6);
  EXPECT_EQ(p.order(), 6u);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(p.pow(6), Permutation::identity(6));
  EXPECT_EQ(p.pow(-1), p.inverse());
  EXPECT_EQ(p.pow(7), p);
  EXPECT_EQ(p.cycle_type(), (std::vector<std::size_t>{3, 2, 1}));
}

TEST(Permutation, IdentityPrintsEmptyCycle) {
  EXPECT_EQ(to_cycle_string(Permutation::identity(4)), "()");
  EXPECT_EQ(parse_cycles("()", 4), Permutation::identity(4));
  EXPECT_EQ(parse_cycles("", 4), Permutation::identity(4));
}

TEST(Permutation, ParsesAcrossWhitespaceAndRoundTrips) {
  const auto p = parse_cycles(" ( 1 , 3 ) (2,4, 5) ", 5);
  EXPECT_EQ(parse_cycles(to_cycle_string(p), 5), p);
}

TEST(Permutation, ParseErrorsCarryPositions) {
  try {
    (void)parse_cycles("(1,2)(3,9)", 5);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
  EXPECT_THROW((void)parse_cycles("(1,2", 5), ParseError);
  EXPECT_THROW((void)parse_cycles("(1,1)", 5), ParseError);
  EXPECT_THROW((void)parse_cycles("(0,1)", 5), ParseError);
  EXPECT_THROW((void)parse_cycles("1,2", 5), ParseError);
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), InvalidArgument);
  EXPECT_THROW(Permutation(std::vector<Point>{0, 3}), InvalidArgument);
  EXPECT_THROW((void)(Permutation::identity(3) * Permutation::identity(4)), InvalidArgument);
}

TEST(PermGroup, NamedGroupOrders) {
  EXPECT_EQ(symmetric(4).order(), 24);
  EXPECT_EQ(symmetric(8).order(), 40320);
  EXPECT_EQ(alternating(5).order(), 60);
  EXPECT_EQ(cyclic(12).order(), 12);
  EXPECT_EQ(dihedral(4).order(), 8);
  EXPECT_EQ(generalized_quaternion(16).order(), 16);
  EXPECT_TRUE(trivial_group().is_trivial());
}

TEST(PermGroup, OrderMatchesClosureOnRandomGenerators) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 5;
    std::vector<Permutation> gens;
    const int k = 1 + trial % 3;
    for (int i = 0; i < k; ++i) {
      Permutation x = random_perm(n, rng);
      // squares keep a share of the groups small
      if (trial % 4 == 0) x = x.pow(2);
      gens.push_back(x);
    }
    const PermGroup g(n, gens);
    const auto elements = oracle::closure(n, gens);
    ASSERT_EQ(g.order(), static_cast<unsigned long>(elements.size())) << "trial " << trial;
    for (const auto& x : elements) EXPECT_TRUE(g.contains(x));
  }
}

TEST(PermGroup, MembershipRejectsOutsiders) {
  const PermGroup a4 = alternating(4);
  EXPECT_TRUE(a4.contains(parse_cycles("(1,2)(3,4)", 4)));
  EXPECT_FALSE(a4.contains(parse_cycles("(1,2)", 4)));
  EXPECT_FALSE(a4.contains(Permutation::identity(5)));
}

TEST(PermGroup, RankIsABijection) {
  const PermGroup g = generalized_quaternion(16);
  std::set<Permutation> seen;
  for (std::uint64_t r = 0; r < 16; ++r) {
    const auto x = g.unrank(r);
    EXPECT_EQ(g.rank(x), r);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 16u);
  EXPECT_TRUE(g.unrank(0).is_identity());
  EXPECT_FALSE(g.rank(Permutation::identity(15)).has_value());
}

TEST(PermGroup, EnumerationRespectsOrderCap) {
  Limits tight;
  tight.order_cap = 100;
  EXPECT_THROW((void)symmetric(5).elements(tight), CapExceeded);
  EXPECT_EQ(symmetric(4).elements(tight).size(), 24u);
}

TEST(ConjugacyClasses, MatchBruteForceOnSmallGroups) {
  for (const PermGroup& g : {symmetric(4), alternating(5), dihedral(6), generalized_quaternion(8), gl23()}) {
    const auto cc = conjugacy_classes(g);
    const auto brute = oracle::classes(oracle::closure(g.degree(), g.generators()));
    ASSERT_EQ(cc->size(), brute.size());
    std::multiset<std::uint64_t> a, b;
    for (std::size_t c = 0; c < cc->size(); ++c) a.insert(cc->class_size(c));
    for (const auto& cls : brute) b.insert(cls.size());
    EXPECT_EQ(a, b);
    // each brute class lies entirely in one computed class
    for (const auto& cls : brute) {
      const std::size_t c = cc->class_of(cls.front());
      EXPECT_EQ(cc->class_size(c), cls.size());
      for (const auto& x : cls) EXPECT_EQ(cc->class_of(x), c);
    }
  }
}

TEST(ConjugacyClasses, IdentityFirstAndPowerMaps) {
  const auto cc = conjugacy_classes(symmetric(4));
  EXPECT_TRUE(cc->rep(0).is_identity());
  EXPECT_EQ(cc->exponent(), 12u);
  for (std::size_t c = 0; c < cc->size(); ++c) {
    EXPECT_EQ(cc->power_map(2)[c], cc->class_of(cc->rep(c).pow(2)));
    EXPECT_EQ(cc->inverse_map()[c], cc->class_of(cc->rep(c).inverse()));
    EXPECT_EQ(cc->class_size(c) * cc->centralizer_order(c), 24u);
  }
}

TEST(Subgroups, SylowOrders) {
  EXPECT_EQ(sylow(symmetric(4), 2).order(), 8);
  EXPECT_EQ(sylow(symmetric(4), 3).order(), 3);
  EXPECT_EQ(sylow(symmetric(5), 5).order(), 5);
  EXPECT_EQ(sylow(gl23(), 2).order(), 16);
  EXPECT_EQ(sylow(csu23(), 2).order(), 16);
  EXPECT_EQ(sylow(cyclic(7), 2).order(), 1);
}

TEST(Subgroups, DerivedSeries) {
  std::vector<unsigned long> orders;
  for (const auto& d : derived_series(symmetric(4))) orders.push_back(d.order().get_ui());
  EXPECT_EQ(orders, (std::vector<unsigned long>{24, 12, 4, 1}));
  EXPECT_TRUE(is_solvable(symmetric(4)));
  EXPECT_FALSE(is_solvable(alternating(5)));
  EXPECT_EQ(derived_length(generalized_quaternion(8)), 2u);
  EXPECT_THROW((void)derived_length(symmetric(5)), Unsupported);
}

TEST(Subgroups, NilpotencyAgreesWithElementCount) {
  for (const PermGroup& g : {symmetric(3), generalized_quaternion(16), cyclic(12), alternating(4), dihedral(4),
                             elementary_abelian(3, 2), csu23()}) {
    EXPECT_EQ(is_nilpotent(g), oracle::is_nilpotent(oracle::closure(g.degree(), g.generators())));
  }
}

TEST(Subgroups, NormalClosureAndNormality) {
  const PermGroup s4 = symmetric(4);
  const auto v4 = normal_closure(s4, {parse_cycles("(1,2)(3,4)", 4)});
  EXPECT_EQ(v4.order(), 4);
  EXPECT_TRUE(is_normal(v4.group(), s4));
  const PermGroup s3(4, {parse_cycles("(1,2)", 4), parse_cycles("(1,2,3)", 4)});
  EXPECT_FALSE(is_normal(s3, s4));
  EXPECT_THROW((void)subgroup(alternating(4), {parse_cycles("(1,2)", 4)}), InvalidArgument);
}

TEST(Subgroups, CosetActionGivesQuotient) {
  const PermGroup s4 = symmetric(4);
  const auto v4 = normal_closure(s4, {parse_cycles("(1,2)(3,4)", 4)}).group();
  const CosetAction ca(s4, v4);
  EXPECT_EQ(ca.index(), 6u);
  EXPECT_EQ(ca.image().order(), 6);
  EXPECT_FALSE(is_nilpotent(ca.image()));
  for (const auto& x : s4.elements()) {
    EXPECT_EQ(ca.coset_of(ca.lift(ca.map(x)) * x.inverse()), 0u);
  }
  const auto pre = ca.preimage(PermGroup(6, {}));
  EXPECT_TRUE(same_group(pre, v4));
}

TEST(Subgroups, CosetActionRespectsDegreeCap) {
  Limits tight;
  tight.degree_cap = 5;
  EXPECT_THROW(CosetAction(symmetric(4), PermGroup(4, {}), tight), CapExceeded);
  EXPECT_NO_THROW(CosetAction(symmetric(4), alternating(4), tight));
}

TEST(NumberTheory, PrimeParts) {
  EXPECT_EQ(p_part(24, 2), 8u);
  EXPECT_EQ(p_part(24, 5), 1u);
  EXPECT_EQ(p_part(48, 2), 16u);
  EXPECT_THROW((void)p_part(24, 4), InvalidArgument);
}
