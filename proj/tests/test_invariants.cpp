#include <gtest/gtest.h>

#include "codeg/analysis.hpp"
#include "codeg/catalog.hpp"
#include "oracles.hpp"

using namespace codeg;

namespace {

PermGroup catalog_group(const std::string& name) { return find_catalog_entry(name)->build(Limits{}); }

std::vector<std::uint64_t> as_vector(const std::set<std::uint64_t>& s) { return {s.begin(), s.end()}; }

// Brute-force view of a group: explicit elements, classes and normal subgroups
// as element sets, each normal subgroup also recorded as a class mask in the
// numbering used by the library's class object.
struct Brute {
  oracle::Elements elements;
  std::vector<std::vector<bool>> masks;
  std::vector<oracle::Elements> normals;

  Brute(const PermGroup& g, const ConjugacyClasses& cc) {
    elements = oracle::closure(g.degree(), g.generators());
    const auto cls = oracle::classes(elements);
    for (const auto& m : oracle::normal_subgroups(cls, elements.size())) {
      std::vector<bool> lib(cc.size(), false);
      oracle::Elements members;
      for (std::size_t c = 0; c < cls.size(); ++c) {
        if (!m[c]) continue;
        lib[cc.class_of(cls[c].front())] = true;
        members.insert(members.end(), cls[c].begin(), cls[c].end());
      }
      std::sort(members.begin(), members.end());
      masks.push_back(std::move(lib));
      normals.push_back(std::move(members));
    }
  }

  // Index of the largest normal subgroup with the property; -1 if the
  // qualifying members have no unique maximum.
  template <class Pred>
  int largest(Pred pred) const {
    int best = -1;
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if (pred(normals[i]) && (best < 0 || normals[i].size() > normals[best].size())) best = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if (pred(normals[i]) && !std::includes(normals[best].begin(), normals[best].end(), normals[i].begin(),
                                             normals[i].end())) {
        return -1;
      }
    }
    return best;
  }
};

bool subset(const oracle::Elements& a, const oracle::Elements& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// N/F nilpotent, tested by running the lower central series of N modulo F.
bool nilpotent_mod(const oracle::Elements& n, const oracle::Elements& f) {
  oracle::Elements cur = n;
  while (true) {
    std::set<Permutation> gens(f.begin(), f.end());
    for (const auto& x : n) {
      for (const auto& y : cur) gens.insert(x.inverse() * y.inverse() * x * y);
    }
    oracle::Elements next = oracle::closure(n.front().degree(), {gens.begin(), gens.end()});
    if (next == cur) return cur == f;
    cur = std::move(next);
  }
}

std::vector<std::uint64_t> brute_fitting_orders(const Brute& b) {
  std::vector<std::uint64_t> out;
  oracle::Elements f{b.elements.front()};
  while (f.size() < b.elements.size()) {
    const int i = b.largest([&](const oracle::Elements& n) { return subset(f, n) && nilpotent_mod(n, f); });
    if (i < 0) throw std::runtime_error("no unique Fitting term");
    if (b.normals[i].size() == f.size()) throw std::runtime_error("Fitting series stalled");
    f = b.normals[i];
    out.push_back(f.size());
  }
  return out;
}

std::vector<std::string> small_catalog(std::uint64_t max_order, std::size_t max_classes) {
  std::vector<std::string> out;
  for (const auto& e : catalog()) {
    const PermGroup g = e.build(Limits{});
    if (g.order() > static_cast<unsigned long>(max_order)) continue;
    if (conjugacy_classes(g)->size() > max_classes) continue;
    out.push_back(e.name);
  }
  return out;
}

}  // namespace

TEST(Kernels, S4LinearAndDegreeTwoCharacters) {
  const auto t = character_table(symmetric(4));
  std::map<std::uint64_t, std::set<std::uint64_t>> kernel_orders;  // degree -> kernel orders
  for (std::size_t i = 0; i < t->size(); ++i) kernel_orders[t->degree(i)].insert(kernel(*t, i).order());
  EXPECT_EQ(kernel_orders[1], (std::set<std::uint64_t>{12, 24}));
  EXPECT_EQ(kernel_orders[2], (std::set<std::uint64_t>{4}));
  EXPECT_EQ(kernel_orders[3], (std::set<std::uint64_t>{1}));
}

TEST(Codegrees, KnownSets) {
  auto cods = [](const PermGroup& g) { return codegree_set(*character_table(g)).values; };
  EXPECT_EQ(cods(symmetric(4)), (std::vector<std::uint64_t>{1, 2, 3, 8}));
  EXPECT_EQ(cods(generalized_quaternion(8)), (std::vector<std::uint64_t>{1, 2, 4}));
  EXPECT_EQ(cods(csu23()), (std::vector<std::uint64_t>{1, 2, 3, 8, 12, 24}));
  EXPECT_EQ(cods(gl23()), (std::vector<std::uint64_t>{1, 2, 3, 8, 12, 24}));
  EXPECT_EQ(cods(cyclic(12)), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(cods(alternating(5)), (std::vector<std::uint64_t>{1, 12, 15, 20}));
  EXPECT_EQ(cods(trivial_group()), (std::vector<std::uint64_t>{1}));
}

TEST(Codegrees, KernelIsWhereTheCharacterTakesItsDegree) {
  for (const char* name : {"S4", "Gamma(3^2)", "Q16", "Aff(Mono(3,2))"}) {
    const PermGroup g = catalog_group(name);
    const auto t = character_table(g);
    const auto elements = oracle::closure(g.degree(), g.generators());
    for (std::size_t i = 0; i < t->size(); ++i) {
      const Cyclotomic d(static_cast<long>(t->degree(i)));
      std::uint64_t count = 0;
      for (const auto& x : elements) count += t->value(i, t->classes().class_of(x)) == d;
      const auto k = kernel(*t, i);
      EXPECT_EQ(k.order(), count);
      EXPECT_EQ(codegree(*t, i) * t->degree(i) * count, elements.size());
    }
  }
}

TEST(Codegrees, QuotientCodegreesAreComputedOnTheQuotient) {
  for (const char* name : {"S4", "GL(2,3)", "CSU(2,3)", "Aff(GL(2,2))", "D6"}) {
    SCOPED_TRACE(name);
    GroupAnalysis a(name, catalog_group(name));
    for (const auto& n : a.lattice()) {
      const auto part = cod_partition(a.codegrees(), n);
      const CosetAction q(a.group(), n.group());
      const auto quotient = codegree_set(*character_table(q.image())).values;
      EXPECT_EQ(as_vector(part.quotient), quotient) << "|N| = " << n.order();
    }
  }
}

TEST(Codegrees, PartitionEdgeCases) {
  GroupAnalysis a("S4", symmetric(4));
  const auto& cods = a.codegrees();
  const auto all = std::set<std::uint64_t>(cods.values.begin(), cods.values.end());
  const auto triv = cod_partition(cods, NormalSubgroup::trivial(a.classes()));
  EXPECT_EQ(triv.quotient, all);
  EXPECT_TRUE(triv.relative.empty());
  const auto whole = cod_partition(cods, NormalSubgroup::whole(a.classes()));
  EXPECT_EQ(whole.quotient, (std::set<std::uint64_t>{1}));
  EXPECT_EQ(whole.relative, (std::set<std::uint64_t>{2, 3, 8}));
  const auto v4 = cod_partition(cods, a.fitting());
  EXPECT_EQ(v4.quotient, (std::set<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(v4.relative, (std::set<std::uint64_t>{8}));
}

TEST(Lattice, MatchesBruteForceEnumeration) {
  for (const auto& name : small_catalog(400, 14)) {
    SCOPED_TRACE(name);
    GroupAnalysis a(name, catalog_group(name));
    const Brute b(a.group(), *a.classes());
    std::set<std::vector<bool>> lib;
    for (const auto& n : a.lattice()) lib.insert(n.mask());
    std::set<std::vector<bool>> brute(b.masks.begin(), b.masks.end());
    EXPECT_EQ(lib, brute);
  }
}

TEST(Lattice, NamedCounts) {
  auto count = [](const PermGroup& g) { return normal_subgroups(*character_table(g)).size(); };
  EXPECT_EQ(count(generalized_quaternion(8)), 6u);
  EXPECT_EQ(count(alternating(5)), 2u);
  EXPECT_EQ(count(symmetric(4)), 4u);
  EXPECT_EQ(count(cyclic(12)), 6u);
  EXPECT_EQ(count(symmetric(5)), 3u);
}

TEST(Lattice, RejectsNonSubgroupMasks) {
  const auto cc = conjugacy_classes(symmetric(4));
  std::vector<bool> m(cc->size(), false);
  m[0] = true;
  m[cc->class_of(parse_cycles("(1,2)", 4))] = true;
  EXPECT_THROW(NormalSubgroup(cc, m), InvalidArgument);
  m[0] = false;
  EXPECT_THROW(NormalSubgroup(cc, m), InvalidArgument);
}

TEST(SubgroupInvariants, FittingRadicalAndOpMatchBruteForce) {
  for (const auto& name : small_catalog(400, 14)) {
    SCOPED_TRACE(name);
    GroupAnalysis a(name, catalog_group(name));
    const Brute b(a.group(), *a.classes());
    const int f = b.largest([](const oracle::Elements& n) { return oracle::is_nilpotent(n); });
    ASSERT_GE(f, 0);
    EXPECT_EQ(a.fitting().mask(), b.masks[f]);
    const int s = b.largest([](const oracle::Elements& n) { return oracle::derived_length(n) != SIZE_MAX; });
    ASSERT_GE(s, 0);
    EXPECT_EQ(a.radical().mask(), b.masks[s]);
    for (std::uint64_t p : prime_divisors(a.classes()->group_order())) {
      const int o = b.largest([p](const oracle::Elements& n) { return is_prime_power_of(n.size(), p); });
      ASSERT_GE(o, 0);
      EXPECT_EQ(largest_normal_p_subgroup(a.lattice(), p).mask(), b.masks[o]) << "p = " << p;
    }
    std::set<std::vector<bool>> minimal_lib, minimal_brute;
    for (const auto& n : minimal_normal_subgroups(a.lattice())) minimal_lib.insert(n.mask());
    for (std::size_t i = 0; i < b.normals.size(); ++i) {
      if (b.normals[i].size() == 1) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < b.normals.size(); ++j) {
        if (b.normals[j].size() > 1 && b.normals[j].size() < b.normals[i].size() && subset(b.normals[j], b.normals[i])) {
          minimal = false;
        }
      }
      if (minimal) minimal_brute.insert(b.masks[i]);
    }
    EXPECT_EQ(minimal_lib, minimal_brute);
  }
}

TEST(SubgroupInvariants, NamedValues) {
  GroupAnalysis s4("S4", symmetric(4));
  EXPECT_EQ(s4.fitting().order(), 4u);
  EXPECT_EQ(s4.radical().order(), 24u);
  GroupAnalysis s5("S5", symmetric(5));
  EXPECT_EQ(s5.fitting().order(), 1u);
  EXPECT_EQ(s5.radical().order(), 1u);
  GroupAnalysis csu("CSU(2,3)", csu23());
  EXPECT_EQ(csu.fitting().order(), 8u);
  GroupAnalysis q16("Q16", generalized_quaternion(16));
  EXPECT_TRUE(q16.fitting().is_whole());
}

TEST(FittingSeries, NamedHeights) {
  EXPECT_EQ(fitting_height(trivial_group()), 0u);
  EXPECT_EQ(fitting_height(generalized_quaternion(8)), 1u);
  EXPECT_EQ(fitting_height(cyclic(12)), 1u);
  EXPECT_EQ(fitting_height(symmetric(3)), 2u);
  EXPECT_EQ(fitting_height(symmetric(4)), 3u);
  EXPECT_EQ(fitting_height(csu23()), 3u);
  EXPECT_EQ(fitting_series(symmetric(4)).orders(), (std::vector<std::uint64_t>{4, 12, 24}));
  EXPECT_EQ(fitting_series(catalog_group("Aff(CSU(2,3))")).height, 4u);
  EXPECT_THROW((void)fitting_height(alternating(5)), Unsupported);
}

TEST(FittingSeries, MatchesBruteForceUpperSeries) {
  for (const auto& name : small_catalog(200, 14)) {
    SCOPED_TRACE(name);
    const PermGroup g = catalog_group(name);
    if (!is_solvable(g)) continue;
    const auto cc = conjugacy_classes(g);
    const Brute b(g, *cc);
    EXPECT_EQ(fitting_series(cc).orders(), brute_fitting_orders(b));
  }
}

TEST(FittingSeries, TermsAreNormalInTheOriginalGroup) {
  for (const char* name : {"Aff(GL(2,3))", "Aff(Gamma(5^2))", "Aff(Mono(5,2))"}) {
    const PermGroup g = catalog_group(name);
    const auto fd = fitting_series(g);
    ASSERT_FALSE(fd.series.empty());
    EXPECT_TRUE(fd.series.back().is_whole());
    for (const auto& n : fd.series) EXPECT_TRUE(is_normal(n.group(), g));
  }
}

TEST(VanishingOff, ExamplesInS4) {
  const auto t = character_table(symmetric(4));
  std::map<std::uint64_t, std::set<std::uint64_t>> orders;  // degree -> |V(θ)|
  for (std::size_t i = 0; i < t->size(); ++i) orders[t->degree(i)].insert(vanishing_off_subgroup(*t, i).order());
  EXPECT_EQ(orders[1], (std::set<std::uint64_t>{24}));
  EXPECT_EQ(orders[2], (std::set<std::uint64_t>{12}));
  EXPECT_EQ(orders[3], (std::set<std::uint64_t>{24}));
}

TEST(VanishingOff, MatchesGeneratedSubgroup) {
  for (const char* name : {"GL(2,3)", "Q16", "Aff(GL(2,2))", "Gamma(2^3)", "A5"}) {
    const PermGroup g = catalog_group(name);
    const auto t = character_table(g);
    const auto elements = oracle::closure(g.degree(), g.generators());
    for (std::size_t i = 0; i < t->size(); ++i) {
      std::vector<Permutation> gens;
      for (const auto& x : elements) {
        if (!t->value(i, t->classes().class_of(x)).is_zero()) gens.push_back(x);
      }
      EXPECT_EQ(vanishing_off_subgroup(*t, i).order(), oracle::closure(g.degree(), gens).size());
    }
  }
}

TEST(GroupAnalysis, NilpotentGroupsAreTheirOwnFittingSubgroup) {
  for (const auto& e : catalog()) {
    const PermGroup g = e.build(Limits{});
    if (g.order() > 1000) continue;
    GroupAnalysis a(e.name, g);
    EXPECT_EQ(a.fitting().is_whole(), oracle::is_nilpotent(oracle::closure(g.degree(), g.generators()))) << e.name;
  }
}
