#pragma once

// Invariants read off a character table: kernels, codegrees, the lattice of
// normal subgroups, Fitting subgroup and series, solvable radical and
// vanishing-off subgroups.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "codeg/class_function.hpp"
#include "codeg/subgroups.hpp"

namespace codeg {

/// A normal subgroup given as a union of conjugacy classes.
class NormalSubgroup {
 public:
  /// Verifies that the union of the given classes is a subgroup.
  NormalSubgroup(ClassesPtr classes, std::vector<bool> mask) : classes_(std::move(classes)), mask_(std::move(mask)) {
    if (mask_.size() != classes_->size()) throw InvalidArgument("class mask length mismatch");
    if (!mask_[0]) throw InvalidArgument("normal subgroup must contain the identity class");
    std::vector<Permutation> reps;
    for (std::size_t c = 0; c < mask_.size(); ++c) {
      if (!mask_[c]) continue;
      order_ += classes_->class_size(c);
      if (c != 0) reps.push_back(classes_->rep(c));
    }
    group_ = normal_closure(classes_->group(), reps).group();
    if (group_.order() != static_cast<unsigned long>(order_)) {
      throw InvalidArgument("class union of size " + std::to_string(order_) + " is not a subgroup");
    }
  }

  static NormalSubgroup whole(ClassesPtr cc) {
    const std::size_t k = cc->size();
    return {std::move(cc), std::vector<bool>(k, true)};
  }
  static NormalSubgroup trivial(ClassesPtr cc) {
    std::vector<bool> m(cc->size(), false);
    m[0] = true;
    return {std::move(cc), std::move(m)};
  }

  [[nodiscard]] const ClassesPtr& classes_ptr() const noexcept { return classes_; }
  [[nodiscard]] const std::vector<bool>& mask() const noexcept { return mask_; }
  [[nodiscard]] bool has_class(std::size_t c) const { return mask_[c]; }
  [[nodiscard]] std::vector<std::size_t> class_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < mask_.size(); ++c) {
      if (mask_[c]) out.push_back(c);
    }
    return out;
  }
  [[nodiscard]] std::uint64_t order() const noexcept { return order_; }
  [[nodiscard]] const PermGroup& group() const noexcept { return group_; }
  [[nodiscard]] SubgroupHandle handle() const { return {classes_->group(), group_}; }
  [[nodiscard]] bool is_trivial() const noexcept { return order_ == 1; }
  [[nodiscard]] bool is_whole() const { return order_ == classes_->group_order(); }

  [[nodiscard]] bool subset_of(const NormalSubgroup& o) const {
    for (std::size_t c = 0; c < mask_.size(); ++c) {
      if (mask_[c] && !o.mask_[c]) return false;
    }
    return true;
  }
  /// Strict containment: subset and smaller order.
  [[nodiscard]] bool proper_subset_of(const NormalSubgroup& o) const {
    return subset_of(o) && order_ < o.order_;
  }

  bool operator==(const NormalSubgroup& o) const { return mask_ == o.mask_; }

 private:
  ClassesPtr classes_;
  std::vector<bool> mask_;
  std::uint64_t order_ = 0;
  PermGroup group_;
};

inline NormalSubgroup intersect(const NormalSubgroup& a, const NormalSubgroup& b) {
  std::vector<bool> m(a.mask().size());
  for (std::size_t c = 0; c < m.size(); ++c) m[c] = a.has_class(c) && b.has_class(c);
  return {a.classes_ptr(), std::move(m)};
}

/// ker χ = union of the classes where χ takes the value χ(1).
inline NormalSubgroup kernel(const CharacterTable& t, std::size_t chi) {
  const Cyclotomic d(static_cast<long>(t.degree(chi)));
  std::vector<bool> m(t.size());
  for (std::size_t c = 0; c < t.size(); ++c) m[c] = t.value(chi, c) == d;
  return {t.classes_ptr(), std::move(m)};
}

/// cod χ = |G : ker χ| / χ(1). Non-integral results are hard errors.
inline std::uint64_t codegree(const CharacterTable& t, std::size_t chi, const NormalSubgroup& ker) {
  const std::uint64_t index = t.group_order() / ker.order();
  if (index % t.degree(chi) != 0) {
    throw InternalError("codegree: degree " + std::to_string(t.degree(chi)) + " does not divide kernel index " +
                        std::to_string(index));
  }
  return index / t.degree(chi);
}

inline std::uint64_t codegree(const CharacterTable& t, std::size_t chi) {
  return codegree(t, chi, kernel(t, chi));
}

struct CharacterCodegree {
  std::size_t index;
  std::uint64_t degree;
  NormalSubgroup kernel;
  std::uint64_t codegree;
};

struct CodegreeSet {
  std::vector<std::uint64_t> values;  // sorted, distinct
  std::vector<CharacterCodegree> per_char;

  [[nodiscard]] bool contains(std::uint64_t v) const {
    return std::binary_search(values.begin(), values.end(), v);
  }
};

inline CodegreeSet codegree_set(const CharacterTable& t) {
  CodegreeSet out;
  std::set<std::uint64_t> vals;
  for (std::size_t i = 0; i < t.size(); ++i) {
    NormalSubgroup k = kernel(t, i);
    const std::uint64_t c = codegree(t, i, k);
    vals.insert(c);
    out.per_char.push_back({i, t.degree(i), std::move(k), c});
  }
  out.values.assign(vals.begin(), vals.end());
  return out;
}

/// cod(G/N) (characters with N in the kernel) and cod(G|N) (the rest).
struct CodPartition {
  std::set<std::uint64_t> quotient;
  std::set<std::uint64_t> relative;
};

inline CodPartition cod_partition(const CodegreeSet& cods, const NormalSubgroup& n) {
  CodPartition out;
  for (const auto& pc : cods.per_char) {
    (n.subset_of(pc.kernel) ? out.quotient : out.relative).insert(pc.codegree);
  }
  return out;
}

/// All normal subgroups: closure of the irreducible kernels under intersection.
/// Sorted by order, ties broken by class mask.
inline std::vector<NormalSubgroup> normal_subgroups(const CharacterTable& t) {
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> masks;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto m = kernel(t, i).mask();
    if (seen.insert(m).second) masks.push_back(std::move(m));
  }
  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      std::vector<bool> m(t.size());
      for (std::size_t c = 0; c < m.size(); ++c) m[c] = masks[a][c] && masks[b][c];
      if (seen.insert(m).second) masks.push_back(std::move(m));
    }
  }
  std::vector<NormalSubgroup> out;
  for (auto& m : masks) out.emplace_back(t.classes_ptr(), std::move(m));
  std::sort(out.begin(), out.end(), [](const NormalSubgroup& a, const NormalSubgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.mask() < b.mask();
  });
  return out;
}

namespace detail {

template <class Pred>
NormalSubgroup largest_with(const std::vector<NormalSubgroup>& lattice, Pred pred, const char* what) {
  std::vector<const NormalSubgroup*> good;
  for (const auto& n : lattice) {
    if (pred(n)) good.push_back(&n);
  }
  if (good.empty()) throw InternalError(std::string("no ") + what + " normal subgroup found");
  const NormalSubgroup* best = good.front();
  for (auto* n : good) {
    if (n->order() > best->order()) best = n;
  }
  for (auto* n : good) {
    if (!n->subset_of(*best)) throw InternalError(std::string("largest ") + what + " normal subgroup is not unique");
  }
  return *best;
}

}  // namespace detail

/// F(G): the largest nilpotent normal subgroup.
inline NormalSubgroup fitting_subgroup(const std::vector<NormalSubgroup>& lattice, const Limits& limits = {}) {
  return detail::largest_with(lattice, [&](const NormalSubgroup& n) { return is_nilpotent(n.group(), limits); },
                              "nilpotent");
}

/// Sol(G): the largest solvable normal subgroup.
inline NormalSubgroup solvable_radical(const std::vector<NormalSubgroup>& lattice) {
  return detail::largest_with(lattice, [](const NormalSubgroup& n) { return is_solvable(n.group()); }, "solvable");
}

/// O_p(G): the largest normal p-subgroup.
inline NormalSubgroup largest_normal_p_subgroup(const std::vector<NormalSubgroup>& lattice, std::uint64_t p) {
  return detail::largest_with(lattice, [p](const NormalSubgroup& n) { return is_prime_power_of(n.order(), p); },
                              "p-");
}

/// Minimal nontrivial members of the lattice.
inline std::vector<NormalSubgroup> minimal_normal_subgroups(const std::vector<NormalSubgroup>& lattice) {
  std::vector<NormalSubgroup> out;
  for (const auto& n : lattice) {
    if (n.is_trivial()) continue;
    bool minimal = true;
    for (const auto& m : lattice) {
      if (!m.is_trivial() && m.proper_subset_of(n)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

/// V(θ) = <h : θ(h) ≠ 0>.
inline NormalSubgroup vanishing_off_subgroup(const CharacterTable& t, std::size_t theta) {
  const auto& cc = t.classes();
  std::vector<Permutation> gens;
  for (std::size_t c = 1; c < t.size(); ++c) {
    if (!t.value(theta, c).is_zero()) gens.push_back(cc.rep(c));
  }
  const PermGroup v = normal_closure(cc.group(), gens).group();
  std::vector<bool> m(t.size());
  for (std::size_t c = 0; c < t.size(); ++c) m[c] = v.contains(cc.rep(c));
  NormalSubgroup out(t.classes_ptr(), std::move(m));
  if (out.group().order() != v.order()) throw InternalError("vanishing-off subgroup is not a union of classes");
  return out;
}

/// Classes of `classes` whose representatives lie in `sub`.
inline NormalSubgroup normal_subgroup_from_group(const ClassesPtr& classes, const PermGroup& sub) {
  std::vector<bool> m(classes->size());
  for (std::size_t c = 0; c < m.size(); ++c) m[c] = sub.contains(classes->rep(c));
  NormalSubgroup n(classes, std::move(m));
  if (n.order() != sub.order_u64()) throw InvalidArgument("subgroup is not normal");
  return n;
}

}  // namespace codeg
