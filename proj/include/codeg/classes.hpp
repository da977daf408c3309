#pragma once

// Conjugacy classes by full element enumeration.
//
// Elements are addressed by their chain rank. Each class is the orbit of its
// first-found element under conjugation by the generators, so the result is
// exact without any random search. Class 0 is the identity class and classes
// are numbered in order of their smallest rank, which makes the numbering
// deterministic for a given group object.

#include <cstdint>
#include <memory>
#include <numeric>
#include <vector>

#include "codeg/perm_group.hpp"

namespace codeg {

class ConjugacyClasses {
 public:
  ConjugacyClasses(PermGroup group, const Limits& limits = {}) : group_(std::move(group)) {
    group_.require_enumerable(limits);
    const std::uint64_t n = group_.order_u64();
    class_of_rank_.assign(n, -1);
    const auto& gens = group_.generators();
    std::vector<Permutation> gen_inv;
    for (const auto& s : gens) gen_inv.push_back(s.inverse());

    for (std::uint64_t start = 0; start < n; ++start) {
      if (class_of_rank_[start] >= 0) continue;
      const auto cls = static_cast<std::int32_t>(reps_.size());
      Permutation rep = group_.unrank(start);
      std::vector<std::uint64_t> members{start};
      class_of_rank_[start] = cls;
      std::vector<Permutation> queue{rep};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (std::size_t s = 0; s < gens.size(); ++s) {
          Permutation c = gens[s] * queue[q] * gen_inv[s];
          const std::uint64_t r = *group_.rank(c);
          if (class_of_rank_[r] >= 0) continue;
          class_of_rank_[r] = cls;
          members.push_back(r);
          queue.push_back(std::move(c));
        }
      }
      reps_.push_back(std::move(rep));
      members_.push_back(std::move(members));
    }

    const std::size_t k = reps_.size();
    rep_order_.resize(k);
    exponent_ = 1;
    for (std::size_t i = 0; i < k; ++i) {
      rep_order_[i] = reps_[i].order();
      exponent_ = std::lcm(exponent_, rep_order_[i]);
    }
    power_maps_.assign(exponent_, std::vector<std::size_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
      Permutation x(group_.degree());
      for (std::uint64_t m = 0; m < exponent_; ++m) {
        power_maps_[m][i] = class_of(x);
        x = x * reps_[i];
      }
    }
    inverse_map_.resize(k);
    for (std::size_t i = 0; i < k; ++i) inverse_map_[i] = power_maps_[exponent_ - 1][i];
  }

  [[nodiscard]] const PermGroup& group() const noexcept { return group_; }
  [[nodiscard]] std::size_t size() const noexcept { return reps_.size(); }
  [[nodiscard]] const std::vector<Permutation>& reps() const noexcept { return reps_; }
  [[nodiscard]] const Permutation& rep(std::size_t i) const { return reps_[i]; }
  [[nodiscard]] std::uint64_t class_size(std::size_t i) const { return members_[i].size(); }
  [[nodiscard]] std::vector<std::uint64_t> sizes() const {
    std::vector<std::uint64_t> s;
    for (const auto& m : members_) s.push_back(m.size());
    return s;
  }
  [[nodiscard]] std::uint64_t group_order() const noexcept { return class_of_rank_.size(); }
  [[nodiscard]] std::uint64_t centralizer_order(std::size_t i) const {
    return group_order() / class_size(i);
  }
  [[nodiscard]] std::uint64_t rep_order(std::size_t i) const { return rep_order_[i]; }
  [[nodiscard]] std::uint64_t exponent() const noexcept { return exponent_; }

  /// Ranks of the members of class i.
  [[nodiscard]] const std::vector<std::uint64_t>& members(std::size_t i) const {
    return members_[i];
  }
  [[nodiscard]] std::size_t class_of_rank(std::uint64_t r) const {
    return static_cast<std::size_t>(class_of_rank_[r]);
  }
  /// Class index of g; throws if g is not in the group.
  [[nodiscard]] std::size_t class_of(const Permutation& g) const {
    auto r = group_.rank(g);
    if (!r) throw InvalidArgument("element is not in the group");
    return class_of_rank(*r);
  }

  /// power_map(m)[i] = class of rep(i)^m, for 0 <= m < exponent().
  [[nodiscard]] const std::vector<std::size_t>& power_map(std::uint64_t m) const {
    return power_maps_[m % exponent_];
  }
  [[nodiscard]] const std::vector<std::size_t>& inverse_map() const noexcept {
    return inverse_map_;
  }

 private:
  PermGroup group_;
  std::vector<Permutation> reps_;
  std::vector<std::vector<std::uint64_t>> members_;
  std::vector<std::int32_t> class_of_rank_;
  std::vector<std::uint64_t> rep_order_;
  std::uint64_t exponent_ = 1;
  std::vector<std::vector<std::size_t>> power_maps_;
  std::vector<std::size_t> inverse_map_;
};

inline std::shared_ptr<const ConjugacyClasses> conjugacy_classes(const PermGroup& g,
                                                                 const Limits& limits = {}) {
  return std::make_shared<const ConjugacyClasses>(g, limits);
}

}  // namespace codeg
