#pragma once

// Checks of codegree and Fitting-height statements on concrete groups.
// Every check produces a Report with structured witnesses; failures carry
// the counterexample, skips carry the reason.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "codeg/analysis.hpp"
#include "codeg/catalog.hpp"

namespace codeg {

using json = nlohmann::json;

enum class Status { pass, fail, skipped };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

inline Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw ParseError("unknown status '" + s + "'", 0);
}

struct Report {
  std::string group;
  std::string check;
  Status status = Status::pass;
  std::string reason;
  json lhs;
  json rhs;
  json witnesses = json::array();
  std::uint64_t seed = 42;
  std::optional<std::int64_t> millis;

  bool operator==(const Report&) const = default;
};

inline void to_json(json& j, const Report& r) {
  j = json{{"group", r.group},
           {"check", r.check},
           {"status", to_string(r.status)},
           {"reason", r.reason.empty() ? json(nullptr) : json(r.reason)},
           {"lhs", r.lhs},
           {"rhs", r.rhs},
           {"witnesses", r.witnesses},
           {"seed", r.seed},
           {"millis", r.millis ? json(*r.millis) : json(nullptr)}};
}

inline void from_json(const json& j, Report& r) {
  r.group = j.at("group").get<std::string>();
  r.check = j.at("check").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.reason = j.at("reason").is_null() ? "" : j.at("reason").get<std::string>();
  r.lhs = j.at("lhs");
  r.rhs = j.at("rhs");
  r.witnesses = j.at("witnesses");
  r.seed = j.at("seed").get<std::uint64_t>();
  r.millis = j.at("millis").is_null() ? std::nullopt : std::optional<std::int64_t>(j.at("millis").get<std::int64_t>());
}

inline const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {"thm1.1", "cor1.2",   "prop1.3", "prop1.4",
                                               "lem2suite", "lem3.1", "lem3.3", "halftrans"};
  return ids;
}

inline bool is_matrix_check(const std::string& id) { return id == "lem3.3" || id == "halftrans"; }

namespace detail {

inline Report blank(GroupAnalysis& a, const std::string& check) {
  Report r;
  r.group = a.name();
  r.check = check;
  r.seed = a.options().seed;
  return r;
}

inline Report skip(Report r, std::string reason) {
  r.status = Status::skipped;
  r.reason = std::move(reason);
  return r;
}

inline json to_json_set(const std::vector<std::uint64_t>& v) { return json(v); }
inline json to_json_set(const std::set<std::uint64_t>& v) { return json(std::vector<std::uint64_t>(v.begin(), v.end())); }

/// Whether a ≤ 8·log2(b) + c, decided with integers only.
inline bool log_bound_holds(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (a <= c) return true;
  if (b <= 1) return false;
  mpz_class lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), 2, a - c);
  mpz_ui_pow_ui(rhs.get_mpz_t(), b, 8);
  return lhs <= rhs;
}

inline double log_bound_value(std::uint64_t b, std::uint64_t c) {
  return 8.0 * std::log2(static_cast<double>(b)) + static_cast<double>(c);
}

}  // namespace detail

/// For every χ whose kernel K satisfies K ≰ F(G), or K = F(G) < Sol(G), look
/// for ξ with ker ξ < K and cod ξ > cod χ.
inline Report check_theorem_1_1(GroupAnalysis& a) {
  Report r = detail::blank(a, "thm1.1");
  const auto& cods = a.codegrees();
  const NormalSubgroup& f = a.fitting();
  const NormalSubgroup& sol = a.radical();
  std::size_t triggered = 0, found = 0;
  for (const auto& pc : cods.per_char) {
    const NormalSubgroup& k = pc.kernel;
    const int condition = !k.subset_of(f) ? 1 : (k == f && f.proper_subset_of(sol)) ? 2 : 0;
    if (condition == 0) continue;
    ++triggered;
    json w = {{"chi", pc.index},
              {"condition", condition},
              {"kernel_order", k.order()},
              {"codegree", pc.codegree},
              {"xi", nullptr}};
    for (const auto& q : cods.per_char) {
      if (q.kernel.proper_subset_of(k) && q.codegree > pc.codegree) {
        w["xi"] = q.index;
        w["xi_kernel_order"] = q.kernel.order();
        w["xi_codegree"] = q.codegree;
        ++found;
        break;
      }
    }
    r.witnesses.push_back(std::move(w));
  }
  r.lhs = triggered;
  r.rhs = found;
  if (found != triggered) {
    r.status = Status::fail;
    r.reason = std::to_string(triggered - found) + " character(s) without a witness";
  } else if (triggered == 0) {
    r.reason = "vacuous: no character meets the hypotheses";
  }
  return r;
}

namespace detail {

template <class F>
Report bound_check(GroupAnalysis& a, const std::string& id, F body) {
  Report r = blank(a, id);
  if (!a.solvable()) return skip(std::move(r), "group is not solvable");
  const auto& fd = a.fitting_data();
  const auto& cods = a.codegrees();
  body(r, fd.height, cods.values.size());
  r.witnesses.front()["fitting_series"] = fd.orders();
  r.witnesses.front()["codegrees"] = cods.values;
  return r;
}

}  // namespace detail

/// ℓ_F(G) ≤ |cod(G)| - 1.
inline Report check_cor_1_2(GroupAnalysis& a) {
  return detail::bound_check(a, "cor1.2", [](Report& r, std::size_t h, std::size_t n) {
    const auto rhs = static_cast<std::int64_t>(n) - 1;
    const auto lhs = static_cast<std::int64_t>(h);
    r.lhs = lhs;
    r.rhs = rhs;
    r.status = lhs <= rhs ? Status::pass : Status::fail;
    r.witnesses.push_back({{"equality", lhs == rhs}, {"slack", rhs - lhs}});
  });
}

/// ℓ_F(G) ≤ (|cod(G)| + 2) / 2, compared as 2ℓ_F ≤ |cod| + 2.
inline Report check_prop_1_3(GroupAnalysis& a) {
  return detail::bound_check(a, "prop1.3", [](Report& r, std::size_t h, std::size_t n) {
    r.lhs = h;
    r.rhs = static_cast<double>(n + 2) / 2.0;
    r.status = 2 * h <= n + 2 ? Status::pass : Status::fail;
    r.witnesses.push_back({{"equality", 2 * h == n + 2}, {"slack", static_cast<double>(n + 2) / 2.0 - static_cast<double>(h)}});
  });
}

/// ℓ_F(G) ≤ 8 log2|cod(G)| + 80, and dl(G/F_2(G)) ≤ 8 log2|cod(G)| + 78.
inline Report check_prop_1_4(GroupAnalysis& a) {
  Report r = detail::bound_check(a, "prop1.4", [](Report& r, std::size_t h, std::size_t n) {
    r.lhs = h;
    r.rhs = detail::log_bound_value(n, 80);
    r.status = detail::log_bound_holds(h, n, 80) ? Status::pass : Status::fail;
    r.witnesses.push_back({{"slack", detail::log_bound_value(n, 80) - static_cast<double>(h)}});
  });
  if (r.status == Status::skipped) return r;
  const auto& fd = a.fitting_data();
  std::size_t dl = 0;
  if (fd.height > 2) {
    const CosetAction ca(a.group(), fd.series[1].group(), a.options().limits);
    dl = derived_length(ca.image());
  }
  const std::size_t n = a.codegrees().values.size();
  const bool ok = detail::log_bound_holds(dl, n, 78);
  r.witnesses.front()["derived_length_over_F2"] = dl;
  r.witnesses.front()["derived_length_bound"] = detail::log_bound_value(n, 78);
  if (!ok) {
    r.status = Status::fail;
    r.reason = "derived length of G/F2(G) exceeds the bound";
  }
  return r;
}

/// With V = O_p(G) the unique minimal normal subgroup, cod(G/V) and cod(G|V)
/// partition cod(G). Also checks |V| > |G/V|_p.
inline Report check_lemma_3_1(GroupAnalysis& a) {
  Report r = detail::blank(a, "lem3.1");
  if (a.group().is_trivial()) return detail::skip(std::move(r), "trivial group has no minimal normal subgroup");
  const auto minimal = minimal_normal_subgroups(a.lattice());
  if (minimal.size() != 1) {
    return detail::skip(std::move(r), std::to_string(minimal.size()) + " minimal normal subgroups");
  }
  const NormalSubgroup& v = minimal.front();
  const auto primes = prime_divisors(v.order());
  if (primes.size() != 1) return detail::skip(std::move(r), "minimal normal subgroup is not a p-group");
  const std::uint64_t p = primes.front();
  if (!(largest_normal_p_subgroup(a.lattice(), p) == v)) {
    return detail::skip(std::move(r), "minimal normal subgroup is not O_p(G)");
  }
  const CodPartition part = cod_partition(a.codegrees(), v);
  std::vector<std::uint64_t> common, merged;
  std::set_intersection(part.quotient.begin(), part.quotient.end(), part.relative.begin(), part.relative.end(),
                        std::back_inserter(common));
  std::set_union(part.quotient.begin(), part.quotient.end(), part.relative.begin(), part.relative.end(),
                 std::back_inserter(merged));
  const std::uint64_t quotient_p = p_part(a.table().group_order() / v.order(), p);
  const bool disjoint = common.empty();
  const bool covers = merged == a.codegrees().values;
  const bool wolf = v.order() > quotient_p;
  r.lhs = common.size();
  r.rhs = 0;
  r.witnesses.push_back({{"p", p},
                         {"V_order", v.order()},
                         {"quotient_codegrees", detail::to_json_set(part.quotient)},
                         {"relative_codegrees", detail::to_json_set(part.relative)},
                         {"common", common},
                         {"union_is_cod", covers},
                         {"quotient_p_part", quotient_p},
                         {"V_exceeds_quotient_p_part", wolf}});
  if (!disjoint || !covers || !wolf) {
    r.status = Status::fail;
    r.reason = !disjoint ? "codegree sets intersect" : !covers ? "union differs from cod(G)" : "|V| <= |G/V|_p";
  }
  return r;
}

struct OrbitData {
  std::vector<std::uint64_t> sizes;  // sorted
  bool half_transitive = true;
  std::size_t distinct = 0;
};

/// Orbit sizes of a matrix group on the nonzero vectors.
inline OrbitData nonzero_orbits(const MatrixGroupSpec& spec, const Limits& limits = {}) {
  const PermGroup g = matrix_to_perm(spec, limits);
  const std::size_t q = g.degree();
  std::vector<bool> seen(q, false);
  OrbitData out;
  for (std::size_t v = 1; v < q; ++v) {
    if (seen[v]) continue;
    std::vector<std::size_t> orbit{v};
    seen[v] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& s : g.generators()) {
        const std::size_t w = s(static_cast<Point>(orbit[i]));
        if (!seen[w]) {
          seen[w] = true;
          orbit.push_back(w);
        }
      }
    }
    out.sizes.push_back(orbit.size());
  }
  std::sort(out.sizes.begin(), out.sizes.end());
  std::vector<std::uint64_t> d = out.sizes;
  d.erase(std::unique(d.begin(), d.end()), d.end());
  out.distinct = d.size();
  out.half_transitive = d.size() <= 1;
  return out;
}

/// No proper nonzero invariant subspace: every nonzero orbit spans V.
inline bool is_irreducible(const MatrixGroupSpec& spec, const Limits& limits = {}) {
  const PermGroup g = matrix_to_perm(spec, limits);
  const std::size_t q = g.degree();
  std::vector<bool> seen(q, false);
  for (std::size_t v = 1; v < q; ++v) {
    if (seen[v]) continue;
    std::vector<std::uint64_t> orbit{v};
    seen[v] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& s : g.generators()) {
        const std::size_t w = s(static_cast<Point>(orbit[i]));
        if (!seen[w]) {
          seen[w] = true;
          orbit.push_back(w);
        }
      }
    }
    if (span_dimension(orbit, spec.p, spec.d) != spec.d) return false;
  }
  return true;
}

/// Orbit statistics on V and its dual, plus dl(G/F(G)) ≤ 8 log2 m + 78 when
/// the action is irreducible and G is solvable.
inline Report check_half_transitive(GroupAnalysis& a, const MatrixGroupSpec& spec) {
  Report r = detail::blank(a, "halftrans");
  const auto& lim = a.options().limits;
  const OrbitData orb = nonzero_orbits(spec, lim);
  const OrbitData dual = nonzero_orbits(dual_action(spec), lim);
  const bool irreducible = is_irreducible(spec, lim);
  json w = {{"half_transitive", orb.half_transitive},
            {"m", orb.distinct},
            {"orbit_sizes", orb.sizes},
            {"dual_half_transitive", dual.half_transitive},
            {"dual_orbit_sizes", dual.sizes},
            {"irreducible", irreducible},
            {"solvable", a.solvable()}};
  if (a.solvable()) w["derived_length"] = derived_length(a.group());
  if (irreducible && a.solvable() && orb.distinct > 0) {
    const CosetAction ca(a.group(), a.fitting().group(), lim);
    const std::size_t dl = derived_length(ca.image());
    r.lhs = dl;
    r.rhs = detail::log_bound_value(orb.distinct, 78);
    w["derived_length_over_F"] = dl;
    if (!detail::log_bound_holds(dl, orb.distinct, 78)) {
      r.status = Status::fail;
      r.reason = "derived length of G/F(G) exceeds 8 log2 m + 78";
    }
  } else {
    r.reason = "orbit statistics only: action is not irreducible and solvable";
  }
  r.witnesses.push_back(std::move(w));
  return r;
}

/// For a solvable group acting irreducibly and half-transitively on V:
/// ℓ_F ≤ 2, or ℓ_F = 3 with |cod| ≥ 6, or ℓ_F = 4 with |cod| ≥ 8.
inline Report check_lemma_3_3(GroupAnalysis& a, const MatrixGroupSpec& spec) {
  Report r = detail::blank(a, "lem3.3");
  const auto& lim = a.options().limits;
  if (!a.solvable()) return detail::skip(std::move(r), "group is not solvable");
  if (!is_irreducible(spec, lim)) return detail::skip(std::move(r), "action is reducible");
  const OrbitData orb = nonzero_orbits(spec, lim);
  if (!orb.half_transitive) return detail::skip(std::move(r), "action is not half-transitive");
  const std::size_t h = a.fitting_data().height;
  const std::size_t n = a.codegrees().values.size();
  std::string branch;
  if (h <= 2) {
    branch = "height<=2";
  } else if (h == 3 && n >= 6) {
    branch = "height=3,cod>=6";
  } else if (h == 4 && n >= 8) {
    branch = "height=4,cod>=8";
  }
  r.lhs = h;
  r.rhs = n;
  r.witnesses.push_back({{"branch", branch.empty() ? json(nullptr) : json(branch)},
                         {"fitting_height", h},
                         {"cod_size", n},
                         {"orbit_size", orb.sizes.empty() ? 0 : orb.sizes.front()}});
  if (branch.empty()) {
    r.status = Status::fail;
    r.reason = "no outcome of the trichotomy holds";
  }
  return r;
}

struct FamilyMember {
  std::string origin;
  PermGroup group;
  bool maximal = false;
};

/// A maximal subgroup of g containing h (h proper): one pass over the
/// elements, absorbing every element that does not generate g with h.
inline PermGroup grow_to_maximal(const PermGroup& g, PermGroup h, const Limits& limits = {}) {
  const std::uint64_t n = g.order_u64();
  g.require_enumerable(limits);
  for (std::uint64_t rank = 1; rank < n; ++rank) {
    const Permutation x = g.unrank(rank);
    if (h.contains(x)) continue;
    std::vector<Permutation> gens = h.generators();
    gens.push_back(x);
    PermGroup k(g.degree(), std::move(gens));
    if (k.order() != g.order()) h = std::move(k);
  }
  return h;
}

/// Sylow subgroups, normal subgroups, the derived series, a point
/// stabilizer, and maximal subgroups grown from each of these.
inline std::vector<FamilyMember> subgroup_family(GroupAnalysis& a) {
  const PermGroup& g = a.group();
  const auto& lim = a.options().limits;
  std::vector<FamilyMember> out;
  auto add = [&](std::string origin, const PermGroup& h) {
    for (auto& m : out) {
      if (same_group(m.group, h)) return;
    }
    out.push_back({std::move(origin), h, false});
  };
  for (auto p : prime_divisors(g.order_u64())) add("sylow-" + std::to_string(p), sylow(g, p, lim).group());
  for (const auto& n : a.lattice()) add("normal", n.group());
  for (const auto& d : derived_series(g)) add("derived", d);
  if (g.chain().size() > 1) add("stabilizer", PermGroup(g.degree(), g.chain()[1].generators));
  if (g.is_trivial()) return out;
  const std::size_t seeds = out.size();
  std::vector<PermGroup> maximal;
  for (std::size_t i = 0; i < seeds; ++i) {
    if (out[i].group.order() == g.order()) continue;
    PermGroup m = grow_to_maximal(g, out[i].group, lim);
    if (std::none_of(maximal.begin(), maximal.end(), [&](const PermGroup& x) { return same_group(x, m); })) {
      maximal.push_back(std::move(m));
    }
  }
  for (const auto& m : maximal) add("maximal", m);
  for (auto& member : out) {
    member.maximal = std::any_of(maximal.begin(), maximal.end(),
                                 [&](const PermGroup& x) { return same_group(x, member.group); });
  }
  return out;
}

namespace detail {

struct Tally {
  std::size_t instances = 0;
  std::size_t failures = 0;
  json examples = json::array();

  void record(bool ok, json detail) {
    ++instances;
    if (ok) return;
    ++failures;
    if (examples.size() < 5) examples.push_back(std::move(detail));
  }
};

struct SubTable {
  ClassesPtr classes;
  TablePtr table;
  CodegreeSet cods;
};

inline SubTable sub_table(const PermGroup& h, const TableOptions& opts) {
  auto cc = conjugacy_classes(h, opts.limits);
  auto t = character_table(cc, opts);
  return {cc, t, codegree_set(*t)};
}

}  // namespace detail

/// Codegree lemmas over a family of subgroups: inflation invariance,
/// divisibility along subnormal subgroups, irreducible restriction when
/// G = H ker χ, induction monotonicity with its equality cases for maximal H,
/// and ker χ < N ∩ V(χ).
inline Report check_lemma_2_suite(GroupAnalysis& a) {
  Report r = detail::blank(a, "lem2suite");
  const auto& opts = a.options();
  const CharacterTable& t = a.table();
  const auto& gcc = a.classes();
  const auto& cods = a.codegrees();
  const std::uint64_t order = t.group_order();
  std::map<std::string, detail::Tally> tally;
  for (const char* k : {"inflation", "subnormal_divisibility", "restriction_irreducible", "induction_monotone",
                        "induction_equality", "vanishing_kernel"}) {
    tally[k];
  }

  for (const auto& n : a.lattice()) {
    if (n.is_trivial() || n.is_whole()) continue;

    // inflation from G/N
    const CosetAction ca(a.group(), n.group(), opts.limits);
    const auto q = detail::sub_table(ca.image(), opts);
    std::vector<std::size_t> cmap(t.size());
    for (std::size_t c = 0; c < t.size(); ++c) cmap[c] = q.classes->class_of(ca.map(gcc->rep(c)));
    for (const auto& pc : cods.per_char) {
      if (!n.subset_of(pc.kernel)) continue;
      std::optional<std::size_t> match;
      for (std::size_t psi = 0; psi < q.table->size() && !match; ++psi) {
        bool same = true;
        for (std::size_t c = 0; c < t.size() && same; ++c) same = q.table->value(psi, cmap[c]) == t.value(pc.index, c);
        if (same) match = psi;
      }
      const bool ok = match && q.cods.per_char[*match].codegree == pc.codegree;
      tally["inflation"].record(ok, {{"N_order", n.order()}, {"chi", pc.index}, {"codegree", pc.codegree}});
    }

    // restriction to N and to subnormal subgroups of N
    const auto nt = detail::sub_table(n.group(), opts);
    auto restrict_check = [&](const detail::SubTable& m, const char* shape) {
      const Fusion fu(m.classes, gcc);
      for (const auto& pc : cods.per_char) {
        const auto res = restrict(ClassFunction::from_character(t, pc.index), fu);
        for (const auto& [psi, mult] : constituents(res, *m.table)) {
          const std::uint64_t c = m.cods.per_char[psi].codegree;
          tally["subnormal_divisibility"].record(pc.codegree % c == 0,
                                                 {{"M_order", m.table->group_order()}, {"shape", shape},
                                                  {"chi", pc.index}, {"psi", psi}});
        }
      }
    };
    restrict_check(nt, "normal");
    for (const auto& m2 : normal_subgroups(*nt.table)) {
      if (m2.is_trivial() || m2.is_whole() || is_normal(m2.group(), a.group())) continue;
      restrict_check(detail::sub_table(m2.group(), opts), "subnormal");
    }
  }

  for (const auto& member : subgroup_family(a)) {
    const PermGroup& h = member.group;
    if (h.order() == a.group().order()) continue;
    const auto ht = detail::sub_table(h, opts);
    const Fusion fu(ht.classes, gcc);
    const std::uint64_t horder = h.order_u64();

    for (const auto& pc : cods.per_char) {
      const std::uint64_t meet = fu.intersection_order(pc.kernel.mask());
      if (horder * pc.kernel.order() != order * meet) continue;
      const auto res = restrict(ClassFunction::from_character(t, pc.index), fu);
      tally["restriction_irreducible"].record(inner_product(res, res) == Cyclotomic(1),
                                              {{"H_order", horder}, {"H_origin", member.origin}, {"chi", pc.index}});
    }

    for (std::size_t theta = 0; theta < ht.table->size(); ++theta) {
      const ClassFunction th = ClassFunction::from_character(*ht.table, theta);
      const auto& tk = ht.cods.per_char[theta];
      const auto cons = constituents(induce(th, fu), t);
      for (const auto& [chi, mult] : cons) {
        const auto& pc = cods.per_char[chi];
        tally["induction_monotone"].record(pc.codegree >= tk.codegree, {{"H_order", horder},
                                                                       {"theta", theta},
                                                                       {"chi", chi},
                                                                       {"cod_theta", tk.codegree},
                                                                       {"cod_chi", pc.codegree}});
        if (!member.maximal) continue;
        bool same_kernel = pc.kernel.order() == tk.kernel.order();
        for (std::size_t c = 0; c < ht.table->size() && same_kernel; ++c) {
          if (tk.kernel.has_class(c) && !pc.kernel.has_class(fu[c])) same_kernel = false;
        }
        const bool induced_irreducible = cons.size() == 1 && mult == 1;
        const bool restricts_to_theta =
            restrict(ClassFunction::from_character(t, chi), fu).values() == th.values();
        const bool product_is_g = horder * pc.kernel.order() == order * fu.intersection_order(pc.kernel.mask());
        const bool predicted = (induced_irreducible && same_kernel) || (restricts_to_theta && product_is_g);
        tally["induction_equality"].record((pc.codegree == tk.codegree) == predicted,
                                           {{"H_order", horder}, {"theta", theta}, {"chi", chi}, {"equal",
                                            pc.codegree == tk.codegree}, {"predicted", predicted}});
      }
    }
  }

  for (const auto& pc : cods.per_char) {
    const NormalSubgroup v = vanishing_off_subgroup(t, pc.index);
    for (const auto& n : a.lattice()) {
      if (!pc.kernel.proper_subset_of(n)) continue;
      tally["vanishing_kernel"].record(pc.kernel.proper_subset_of(intersect(n, v)),
                                       {{"chi", pc.index}, {"N_order", n.order()}, {"V_order", v.order()}});
    }
  }

  std::size_t instances = 0, failures = 0;
  for (const auto& [name, tl] : tally) {
    instances += tl.instances;
    failures += tl.failures;
    json w = {{"lemma", name}, {"instances", tl.instances}, {"failures", tl.failures}};
    w["status"] = tl.failures ? "fail" : tl.instances ? "pass" : "skipped";
    if (tl.instances == 0) w["reason"] = "no instance of the hypothesis in the subgroup family";
    if (tl.failures) w["counterexamples"] = tl.examples;
    r.witnesses.push_back(std::move(w));
  }
  r.lhs = failures;
  r.rhs = 0;
  if (failures) {
    r.status = Status::fail;
    r.reason = std::to_string(failures) + " lemma instance(s) failed";
  } else if (instances == 0) {
    r = detail::skip(std::move(r), "no lemma hypothesis applies");
  }
  return r;
}

/// Runs one check, turning resource-cap and unsupported-input errors into skips.
inline Report run_check(GroupAnalysis& a, const std::string& id, const std::optional<MatrixGroupSpec>& matrix) {
  try {
    if (id == "thm1.1") return check_theorem_1_1(a);
    if (id == "cor1.2") return check_cor_1_2(a);
    if (id == "prop1.3") return check_prop_1_3(a);
    if (id == "prop1.4") return check_prop_1_4(a);
    if (id == "lem2suite") return check_lemma_2_suite(a);
    if (id == "lem3.1") return check_lemma_3_1(a);
    if (id == "lem3.3" || id == "halftrans") {
      if (!matrix) return detail::skip(detail::blank(a, id), "group has no linear action");
      return id == "lem3.3" ? check_lemma_3_3(a, *matrix) : check_half_transitive(a, *matrix);
    }
  } catch (const CapExceeded& e) {
    return detail::skip(detail::blank(a, id), std::string("resource cap: ") + e.what());
  }
  throw InvalidArgument("unknown check id '" + id + "'");
}

inline void validate_check_ids(const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end()) {
      throw InvalidArgument("unknown check id '" + id + "'");
    }
  }
}

struct RunOptions {
  TableOptions table;
  std::size_t jobs = 1;
  bool timing = false;
};

struct GroupTask {
  std::string name;
  std::function<PermGroup(const Limits&)> build;
  std::optional<MatrixGroupSpec> matrix;
};

inline std::vector<Report> run_group(const GroupTask& task, const std::vector<std::string>& ids,
                                     const RunOptions& opts) {
  std::vector<Report> out;
  std::optional<GroupAnalysis> a;
  try {
    a.emplace(task.name, task.build(opts.table.limits), opts.table);
  } catch (const CapExceeded& e) {
    for (const auto& id : ids) {
      if (is_matrix_check(id) && !task.matrix) continue;
      Report r;
      r.group = task.name;
      r.check = id;
      r.seed = opts.table.seed;
      out.push_back(detail::skip(std::move(r), std::string("resource cap: ") + e.what()));
    }
    return out;
  }
  for (const auto& id : ids) {
    if (is_matrix_check(id) && !task.matrix) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Report r = run_check(*a, id, task.matrix);
    if (opts.timing) {
      r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Runs the checks on each task. Groups may run in parallel; the result
/// order is task order, then check order.
inline std::vector<Report> run_tasks(const std::vector<GroupTask>& tasks, const std::vector<std::string>& ids,
                                     const RunOptions& opts) {
  validate_check_ids(ids);
  std::vector<std::vector<Report>> per(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        per[i] = run_group(tasks[i], ids, opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opts.jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<Report> out;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    for (auto& r : per[i]) out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<Report> run_catalog(const std::vector<std::string>& ids, std::string_view filter,
                                       const RunOptions& opts = {}) {
  std::vector<GroupTask> tasks;
  for (const auto* e : select_catalog(filter)) tasks.push_back({e->name, e->build, e->matrix});
  return run_tasks(tasks, ids, opts);
}

struct Summary {
  std::size_t pass = 0, fail = 0, skipped = 0;
};

inline Summary summarize(const std::vector<Report>& reports) {
  Summary s;
  for (const auto& r : reports) {
    (r.status == Status::pass ? s.pass : r.status == Status::fail ? s.fail : s.skipped) += 1;
  }
  return s;
}

}  // namespace codeg
