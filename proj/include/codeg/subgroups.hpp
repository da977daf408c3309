#pragma once

// Subgroup machinery on top of PermGroup: closures, derived series, Sylow
// subgroups, nilpotency and coset actions.

#include <cstdint>
#include <vector>

#include "codeg/classes.hpp"
#include "codeg/numtheory.hpp"
#include "codeg/perm_group.hpp"

namespace codeg {

/// A subgroup together with the group it was taken in.
class SubgroupHandle {
 public:
  SubgroupHandle(PermGroup parent, PermGroup group)
      : parent_(std::move(parent)), group_(std::move(group)) {
    if (group_.degree() != parent_.degree()) throw InvalidArgument("subgroup degree mismatch");
    if (!is_subgroup(group_, parent_)) throw InvalidArgument("generator not in parent group");
    if (parent_.order() % group_.order() != 0) {
      throw InternalError("Lagrange violated: subgroup order does not divide group order");
    }
  }

  [[nodiscard]] const PermGroup& parent() const noexcept { return parent_; }
  [[nodiscard]] const PermGroup& group() const noexcept { return group_; }
  [[nodiscard]] const BigInt& order() const noexcept { return group_.order(); }
  [[nodiscard]] std::uint64_t order_u64() const { return group_.order_u64(); }
  [[nodiscard]] bool contains(const Permutation& g) const { return group_.contains(g); }

 private:
  PermGroup parent_;
  PermGroup group_;
};

/// <gens> as a subgroup of G; throws if a generator lies outside G.
inline SubgroupHandle subgroup(const PermGroup& g, std::vector<Permutation> gens) {
  for (const auto& x : gens) {
    if (!g.contains(x)) throw InvalidArgument("subgroup generator " + to_cycle_string(x) + " is not in the group");
  }
  return SubgroupHandle(g, PermGroup(g.degree(), std::move(gens)));
}

inline bool is_normal(const PermGroup& n, const PermGroup& g) {
  for (const auto& x : n.generators()) {
    for (const auto& s : g.generators()) {
      if (!n.contains(conjugate(x, s))) return false;
    }
  }
  return true;
}

/// Smallest normal subgroup of G containing gens.
inline SubgroupHandle normal_closure(const PermGroup& g, const std::vector<Permutation>& gens) {
  std::vector<Permutation> ngens;
  PermGroup n(g.degree(), {});
  for (const auto& x : gens) {
    if (!g.contains(x)) throw InvalidArgument("normal closure generator " + to_cycle_string(x) + " is not in the group");
    if (n.contains(x)) continue;
    ngens.push_back(x);
    n = PermGroup(g.degree(), ngens);
  }
  for (std::size_t i = 0; i < ngens.size(); ++i) {
    for (const auto& s : g.generators()) {
      Permutation c = conjugate(ngens[i], s);
      if (n.contains(c)) continue;
      ngens.push_back(std::move(c));
      n = PermGroup(g.degree(), ngens);
    }
  }
  return SubgroupHandle(g, n);
}

inline PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  }
  return normal_closure(g, comms).group();
}

/// G = G^(0) > G' > G'' > ... until the series stabilizes.
inline std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup d = derived_subgroup(series.back());
    if (d.order() == series.back().order()) break;
    series.push_back(std::move(d));
  }
  return series;
}

inline bool is_solvable(const PermGroup& g) { return derived_series(g).back().is_trivial(); }

/// Number of steps to reach the trivial group; throws for non-solvable input.
inline std::size_t derived_length(const PermGroup& g) {
  auto s = derived_series(g);
  if (!s.back().is_trivial()) throw Unsupported("derived length of a non-solvable group");
  return s.size() - 1;
}

inline bool is_p_element(const Permutation& g, std::uint64_t p) {
  return is_prime_power_of(g.order(), p);
}

/// A Sylow p-subgroup, grown from a cyclic p-subgroup of maximal order by
/// adjoining p-elements of the normalizer. Element scans respect the order cap.
inline SubgroupHandle sylow(const PermGroup& g, std::uint64_t p, const Limits& limits = {}) {
  if (!is_prime(p)) throw InvalidArgument("sylow: " + std::to_string(p) + " is not prime");
  const std::uint64_t n = g.order_u64();
  const std::uint64_t target = p_part(n, p);
  if (target == 1) return SubgroupHandle(g, PermGroup(g.degree(), {}));
  g.require_enumerable(limits);

  Permutation best(g.degree());
  std::uint64_t best_order = 1;
  for (std::uint64_t r = 0; r < n; ++r) {
    Permutation x = g.unrank(r);
    const std::uint64_t o = x.order();
    if (o > best_order && is_prime_power_of(o, p)) {
      best_order = o;
      best = std::move(x);
    }
  }
  std::vector<Permutation> gens{best};
  PermGroup pgroup(g.degree(), gens);

  auto normalizes = [&](const Permutation& x) {
    for (const auto& y : pgroup.generators()) {
      if (!pgroup.contains(conjugate(y, x))) return false;
    }
    return true;
  };

  while (pgroup.order() < static_cast<unsigned long>(target)) {
    bool grown = false;
    for (std::uint64_t r = 0; r < n && !grown; ++r) {
      Permutation x = g.unrank(r);
      if (pgroup.contains(x) || !normalizes(x)) continue;
      // smallest m with x^m in P; xP has order m in N(P)/P
      std::uint64_t m = 1;
      Permutation h = x;
      while (!pgroup.contains(h)) {
        h = h * x;
        ++m;
      }
      if (!is_prime_power_of(m, p)) continue;
      gens.push_back(x.pow(static_cast<std::int64_t>(m / p)));
      pgroup = PermGroup(g.degree(), gens);
      grown = true;
    }
    if (!grown) throw InternalError("sylow: failed to extend p-subgroup");
  }
  return SubgroupHandle(g, pgroup);
}

/// Nilpotent iff every Sylow subgroup is normal.
inline bool is_nilpotent(const PermGroup& g, const Limits& limits = {}) {
  const std::uint64_t n = g.order_u64();
  const auto primes = prime_divisors(n);
  if (primes.size() <= 1) return true;
  for (std::uint64_t p : primes) {
    if (!is_normal(sylow(g, p, limits).group(), g)) return false;
  }
  return true;
}

inline std::uint64_t element_order(const Permutation& g) { return g.order(); }

inline std::uint64_t exponent(const PermGroup& g, const Limits& limits = {}) {
  g.require_enumerable(limits);
  std::uint64_t e = 1;
  for (std::uint64_t r = 0; r < g.order_u64(); ++r) e = std::lcm(e, g.unrank(r).order());
  return e;
}

/// |C_G(x)| = |G| / |x^G|.
inline std::uint64_t centralizer_order(const ConjugacyClasses& classes, const Permutation& x) {
  return classes.centralizer_order(classes.class_of(x));
}

/// Action of G by left multiplication on the left cosets gN.
/// Coset 0 is N itself. For normal N the image is faithful for G/N.
class CosetAction {
 public:
  CosetAction(PermGroup g, PermGroup n, const Limits& limits = {})
      : source_(std::move(g)), subgroup_(std::move(n)) {
    if (!is_subgroup(subgroup_, source_)) throw InvalidArgument("coset action: not a subgroup");
    source_.require_enumerable(limits);
    const std::uint64_t order = source_.order_u64();
    const std::uint64_t sub_order = subgroup_.order_u64();
    const std::uint64_t index = order / sub_order;
    if (index > limits.degree_cap) {
      throw CapExceeded("coset action degree " + std::to_string(index) + " exceeds degree cap " +
                        std::to_string(limits.degree_cap));
    }
    std::vector<Permutation> sub_elements;
    sub_elements.reserve(sub_order);
    for (std::uint64_t r = 0; r < sub_order; ++r) sub_elements.push_back(subgroup_.unrank(r));

    coset_of_rank_.assign(order, UINT32_MAX);
    auto mark = [&](const Permutation& rep) {
      const auto c = static_cast<std::uint32_t>(reps_.size());
      for (const auto& x : sub_elements) coset_of_rank_[*source_.rank(rep * x)] = c;
      reps_.push_back(rep);
    };
    mark(source_.identity());
    for (std::size_t c = 0; c < reps_.size(); ++c) {
      for (const auto& s : source_.generators()) {
        Permutation h = s * reps_[c];
        if (coset_of_rank_[*source_.rank(h)] == UINT32_MAX) mark(h);
      }
    }
    std::vector<Permutation> images;
    for (const auto& s : source_.generators()) images.push_back(map(s));
    image_ = PermGroup(reps_.size(), std::move(images));
  }

  [[nodiscard]] const PermGroup& source() const noexcept { return source_; }
  [[nodiscard]] const PermGroup& subgroup() const noexcept { return subgroup_; }
  [[nodiscard]] const PermGroup& image() const noexcept { return image_; }
  [[nodiscard]] std::size_t index() const noexcept { return reps_.size(); }
  [[nodiscard]] const std::vector<Permutation>& coset_reps() const noexcept { return reps_; }

  [[nodiscard]] std::uint32_t coset_of(const Permutation& g) const {
    auto r = source_.rank(g);
    if (!r) throw InvalidArgument("coset action: element not in group");
    return coset_of_rank_[*r];
  }

  /// Image of g as a permutation of the cosets.
  [[nodiscard]] Permutation map(const Permutation& g) const {
    std::vector<Point> img(reps_.size());
    for (std::size_t c = 0; c < reps_.size(); ++c) img[c] = coset_of(g * reps_[c]);
    return Permutation(std::move(img));
  }

  /// A preimage of an image element (valid when the subgroup is normal).
  [[nodiscard]] Permutation lift(const Permutation& image_element) const {
    return reps_[image_element(0)];
  }

  /// Full preimage of a subgroup of the image (assumes the subgroup is normal).
  [[nodiscard]] PermGroup preimage(const PermGroup& sub) const {
    std::vector<Permutation> gens = subgroup_.generators();
    for (const auto& y : sub.generators()) gens.push_back(lift(y));
    return PermGroup(source_.degree(), std::move(gens));
  }

 private:
  PermGroup source_;
  PermGroup subgroup_;
  PermGroup image_;
  std::vector<Permutation> reps_;
  std::vector<std::uint32_t> coset_of_rank_;
};

inline CosetAction coset_action(const PermGroup& g, const PermGroup& n, const Limits& limits = {}) {
  return CosetAction(g, n, limits);
}

}  // namespace codeg
