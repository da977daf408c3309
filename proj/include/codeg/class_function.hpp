#pragma once

// Class functions: inner products, restriction, induction, decomposition.

#include <cstdint>
#include <utility>
#include <vector>

#include "codeg/character_table.hpp"

namespace codeg {

class ClassFunction {
 public:
  ClassFunction(ClassesPtr classes, std::vector<Cyclotomic> values)
      : classes_(std::move(classes)), values_(std::move(values)) {
    if (values_.size() != classes_->size()) throw InvalidArgument("class function length mismatch");
  }

  static ClassFunction from_character(const CharacterTable& t, std::size_t i) {
    return {t.classes_ptr(), t[i].values};
  }
  static ClassFunction trivial(ClassesPtr cc) {
    const std::size_t k = cc->size();
    return {std::move(cc), std::vector<Cyclotomic>(k, Cyclotomic(1))};
  }
  /// |G| at the identity, 0 elsewhere.
  static ClassFunction regular(ClassesPtr cc) {
    std::vector<Cyclotomic> v(cc->size());
    v[0] = Cyclotomic(static_cast<long>(cc->group_order()));
    return {std::move(cc), std::move(v)};
  }
  /// Number of fixed points of each class representative.
  static ClassFunction permutation_character(ClassesPtr cc) {
    std::vector<Cyclotomic> v;
    for (const auto& g : cc->reps()) {
      long fixed = 0;
      for (std::size_t i = 0; i < g.degree(); ++i) fixed += g(static_cast<Point>(i)) == i;
      v.emplace_back(fixed);
    }
    return {std::move(cc), std::move(v)};
  }

  [[nodiscard]] const ClassesPtr& classes_ptr() const noexcept { return classes_; }
  [[nodiscard]] const ConjugacyClasses& classes() const noexcept { return *classes_; }
  [[nodiscard]] const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  [[nodiscard]] const Cyclotomic& operator[](std::size_t c) const { return values_[c]; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  /// Value at the identity.
  [[nodiscard]] const Cyclotomic& degree() const { return values_[0]; }

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    if (a.classes_ != b.classes_) throw InvalidArgument("class functions on different class sets");
    std::vector<Cyclotomic> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] + b.values_[i];
    return {a.classes_, std::move(v)};
  }

  bool operator==(const ClassFunction& o) const {
    return classes_ == o.classes_ && values_ == o.values_;
  }

 private:
  ClassesPtr classes_;
  std::vector<Cyclotomic> values_;
};

/// (1/|G|) Σ_c |C_c| a(c) conj(b(c)).
inline Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.classes_ptr() != b.classes_ptr()) throw InvalidArgument("inner product of class functions on different groups");
  const auto& cc = a.classes();
  Cyclotomic s;
  for (std::size_t c = 0; c < cc.size(); ++c) {
    s += (a[c] * b[c].conj()).scaled(Rational(static_cast<long>(cc.class_size(c))));
  }
  return s.scaled(Rational(1, static_cast<unsigned long>(cc.group_order())));
}

/// Class fusion of a subgroup into a group: fusion[c] is the class of the
/// subgroup's c-th representative in the parent.
class Fusion {
 public:
  Fusion(ClassesPtr sub, ClassesPtr parent) : sub_(std::move(sub)), parent_(std::move(parent)) {
    if (!is_subgroup(sub_->group(), parent_->group())) throw InvalidArgument("fusion: not a subgroup");
    for (const auto& h : sub_->reps()) map_.push_back(parent_->class_of(h));
  }
  [[nodiscard]] const ClassesPtr& sub() const noexcept { return sub_; }
  [[nodiscard]] const ClassesPtr& parent() const noexcept { return parent_; }
  [[nodiscard]] std::size_t operator[](std::size_t c) const { return map_[c]; }
  [[nodiscard]] const std::vector<std::size_t>& map() const noexcept { return map_; }

  /// |H ∩ N| for a normal subgroup N of the parent given by its class set.
  [[nodiscard]] std::uint64_t intersection_order(const std::vector<bool>& parent_classes) const {
    std::uint64_t n = 0;
    for (std::size_t c = 0; c < map_.size(); ++c) {
      if (parent_classes[map_[c]]) n += sub_->class_size(c);
    }
    return n;
  }

 private:
  ClassesPtr sub_;
  ClassesPtr parent_;
  std::vector<std::size_t> map_;
};

inline ClassFunction restrict(const ClassFunction& chi, const Fusion& f) {
  if (chi.classes_ptr() != f.parent()) throw InvalidArgument("restrict: class function not on the parent group");
  std::vector<Cyclotomic> v;
  for (std::size_t c = 0; c < f.sub()->size(); ++c) v.push_back(chi[f[c]]);
  return {f.sub(), std::move(v)};
}

/// θ^G(g_i) = |C_G(g_i)| Σ_{c fusing into i} θ(h_c) / |C_H(h_c)|.
inline ClassFunction induce(const ClassFunction& theta, const Fusion& f) {
  if (theta.classes_ptr() != f.sub()) throw InvalidArgument("induce: class function not on the subgroup");
  const auto& g = *f.parent();
  const auto& h = *f.sub();
  std::vector<Cyclotomic> v(g.size());
  for (std::size_t c = 0; c < h.size(); ++c) {
    v[f[c]] += theta[c].scaled(Rational(1, static_cast<unsigned long>(h.centralizer_order(c))));
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    v[i] = v[i].scaled(Rational(static_cast<long>(g.centralizer_order(i))));
  }
  return {f.parent(), std::move(v)};
}

/// Multiplicities of irreducible constituents (only nonzero ones listed).
/// Throws InvalidArgument when f is not a character.
inline std::vector<std::pair<std::size_t, std::uint64_t>> constituents(const ClassFunction& f,
                                                                       const CharacterTable& t) {
  if (f.classes_ptr() != t.classes_ptr()) throw InvalidArgument("constituents: class function not on the table's group");
  std::vector<std::pair<std::size_t, std::uint64_t>> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Cyclotomic m = inner_product(f, ClassFunction::from_character(t, i));
    if (!m.is_integer() || m.to_integer() < 0) {
      throw InvalidArgument("not a character: multiplicity " + m.to_string() + " for constituent " +
                            std::to_string(i));
    }
    const mpz_class mi = m.to_integer();
    if (mi != 0) out.emplace_back(i, mi.get_ui());
  }
  return out;
}

}  // namespace codeg
