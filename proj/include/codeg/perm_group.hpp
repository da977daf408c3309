#pragma once

// Permutation groups backed by a deterministic Schreier–Sims stabilizer chain.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "codeg/error.hpp"
#include "codeg/perm.hpp"

namespace codeg {

using BigInt = mpz_class;

/// One level of a stabilizer chain: the stabilizer G_i of base points
/// b_0..b_{i-1}, the orbit of b_i under G_i and a transversal with
/// transversal[k](b_i) = orbit[k]. transversal[0] is the identity.
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> position;  // point -> index in orbit, or -1
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inv;
};

namespace detail {

class ChainBuilder {
 public:
  explicit ChainBuilder(std::size_t degree) : degree_(degree) {}

  std::vector<ChainLevel> build(const std::vector<Permutation>& gens) {
    std::vector<Permutation> moving;
    for (const auto& g : gens) {
      if (!g.is_identity()) moving.push_back(g);
    }
    if (moving.empty()) return {};
    std::size_t base = degree_;
    for (const auto& g : moving) base = std::min(base, g.first_moved());
    levels_.push_back(ChainLevel{});
    levels_[0].base = static_cast<Point>(base);
    levels_[0].generators = std::move(moving);
    recompute_orbit(0);
    complete(0);
    return std::move(levels_);
  }

 private:
  void recompute_orbit(std::size_t l) {
    ChainLevel& lv = levels_[l];
    lv.orbit.assign(1, lv.base);
    lv.position.assign(degree_, -1);
    lv.position[lv.base] = 0;
    lv.transversal.assign(1, Permutation(degree_));
    lv.transversal_inv.assign(1, Permutation(degree_));
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      for (const auto& s : lv.generators) {
        const Point img = s(lv.orbit[k]);
        if (lv.position[img] >= 0) continue;
        lv.position[img] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(img);
        Permutation t = s * lv.transversal[k];
        lv.transversal_inv.push_back(t.inverse());
        lv.transversal.push_back(std::move(t));
      }
    }
  }

  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const ChainLevel& lv = levels_[l];
      const std::int32_t pos = lv.position[g(lv.base)];
      if (pos < 0) return {std::move(g), l};
      g = lv.transversal_inv[static_cast<std::size_t>(pos)] * g;
    }
    return {std::move(g), levels_.size()};
  }

  // Requires levels > i to be complete; afterwards levels >= i are.
  void complete(std::size_t i) {
    for (std::size_t oi = 0; oi < levels_[i].orbit.size(); ++oi) {
      for (std::size_t si = 0; si < levels_[i].generators.size(); ++si) {
        const ChainLevel& lv = levels_[i];
        const Permutation& s = lv.generators[si];
        const Point image = s(lv.orbit[oi]);
        const auto target = static_cast<std::size_t>(lv.position[image]);
        Permutation schreier = lv.transversal_inv[target] * s * lv.transversal[oi];
        auto [residue, j] = sift(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;
        if (j == levels_.size()) {
          levels_.push_back(ChainLevel{});
          levels_.back().base = static_cast<Point>(residue.first_moved());
        }
        for (std::size_t m = i + 1; m <= j; ++m) levels_[m].generators.push_back(residue);
        for (std::size_t m = j + 1; m-- > i + 1;) {
          recompute_orbit(m);
          complete(m);
        }
      }
    }
  }

  std::size_t degree_;
  std::vector<ChainLevel> levels_;
};

}  // namespace detail

/// Immutable permutation group. Copies share the underlying chain.
class PermGroup {
 public:
  /// Trivial group on one point.
  PermGroup() : PermGroup(1, {}) {}

  PermGroup(std::size_t degree, std::vector<Permutation> generators) {
    if (degree == 0) throw InvalidArgument("degree must be positive");
    for (const auto& g : generators) {
      if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
    }
    auto d = std::make_shared<Data>();
    d->degree = degree;
    d->levels = detail::ChainBuilder(degree).build(generators);
    d->generators = std::move(generators);
    d->order = 1;
    for (const auto& lv : d->levels) d->order *= static_cast<unsigned long>(lv.orbit.size());
    data_ = std::move(d);
  }

  [[nodiscard]] std::size_t degree() const noexcept { return data_->degree; }
  [[nodiscard]] const std::vector<Permutation>& generators() const noexcept {
    return data_->generators;
  }
  [[nodiscard]] const std::vector<ChainLevel>& chain() const noexcept { return data_->levels; }
  [[nodiscard]] const BigInt& order() const noexcept { return data_->order; }

  /// Order as a machine integer; throws CapExceeded when it does not fit.
  [[nodiscard]] std::uint64_t order_u64() const {
    if (!data_->order.fits_ulong_p()) throw CapExceeded("group order exceeds 64 bits");
    return data_->order.get_ui();
  }

  [[nodiscard]] bool is_trivial() const noexcept { return data_->levels.empty(); }

  [[nodiscard]] std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& lv : data_->levels) b.push_back(lv.base);
    return b;
  }

  [[nodiscard]] Permutation identity() const { return Permutation(degree()); }

  /// Residue of sifting g through the chain and the level where it stopped.
  [[nodiscard]] std::pair<Permutation, std::size_t> sift(Permutation g) const {
    const auto& levels = data_->levels;
    for (std::size_t l = 0; l < levels.size(); ++l) {
      const std::int32_t pos = levels[l].position[g(levels[l].base)];
      if (pos < 0) return {std::move(g), l};
      g = levels[l].transversal_inv[static_cast<std::size_t>(pos)] * g;
    }
    return {std::move(g), levels.size()};
  }

  [[nodiscard]] bool contains(const Permutation& g) const {
    if (g.degree() != degree()) return false;
    return sift(g).first.is_identity();
  }

  /// Mixed-radix index of g in [0, |G|) derived from transversal positions.
  /// Empty when g is not a member. Requires order_u64() to succeed.
  [[nodiscard]] std::optional<std::uint64_t> rank(Permutation g) const {
    if (g.degree() != degree()) return std::nullopt;
    std::uint64_t r = 0;
    for (const auto& lv : data_->levels) {
      const std::int32_t pos = lv.position[g(lv.base)];
      if (pos < 0) return std::nullopt;
      r = r * lv.orbit.size() + static_cast<std::uint64_t>(pos);
      g = lv.transversal_inv[static_cast<std::size_t>(pos)] * g;
    }
    if (!g.is_identity()) return std::nullopt;
    return r;
  }

  /// Inverse of rank(); unrank(0) is the identity.
  [[nodiscard]] Permutation unrank(std::uint64_t r) const {
    const auto& levels = data_->levels;
    std::vector<std::size_t> pos(levels.size());
    for (std::size_t l = levels.size(); l-- > 0;) {
      pos[l] = r % levels[l].orbit.size();
      r /= levels[l].orbit.size();
    }
    Permutation g(degree());
    for (std::size_t l = 0; l < levels.size(); ++l) g = g * levels[l].transversal[pos[l]];
    return g;
  }

  /// Throws CapExceeded unless |G| <= limits.order_cap.
  void require_enumerable(const Limits& limits) const {
    if (data_->order > static_cast<unsigned long>(limits.order_cap)) {
      throw CapExceeded("group order " + data_->order.get_str() + " exceeds order cap " +
                        std::to_string(limits.order_cap));
    }
  }

  /// All elements in rank order.
  [[nodiscard]] std::vector<Permutation> elements(const Limits& limits = {}) const {
    require_enumerable(limits);
    std::vector<Permutation> out;
    const std::uint64_t n = order_u64();
    out.reserve(n);
    for (std::uint64_t r = 0; r < n; ++r) out.push_back(unrank(r));
    return out;
  }

  /// Same underlying group object (not just equal as sets).
  [[nodiscard]] bool same_object(const PermGroup& other) const noexcept {
    return data_ == other.data_;
  }

 private:
  struct Data {
    std::size_t degree = 1;
    std::vector<Permutation> generators;
    std::vector<ChainLevel> levels;
    BigInt order;
  };
  std::shared_ptr<const Data> data_;
};

inline PermGroup build_group(std::size_t degree, std::vector<Permutation> generators) {
  return PermGroup(degree, std::move(generators));
}

/// True when every element of `sub` lies in `group`.
inline bool is_subgroup(const PermGroup& sub, const PermGroup& group) {
  for (const auto& g : sub.generators()) {
    if (!group.contains(g)) return false;
  }
  return true;
}

/// Equality of groups as sets of permutations.
inline bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && is_subgroup(a, b);
}

}  // namespace codeg
