#pragma once

// Fitting series and a per-group cache of the derived data most checks need.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codeg/invariants.hpp"

namespace codeg {

struct FittingData {
  /// F_1(G) < F_2(G) < ... < F_h(G) = G; empty for the trivial group.
  std::vector<NormalSubgroup> series;
  std::size_t height = 0;

  [[nodiscard]] std::vector<std::uint64_t> orders() const {
    std::vector<std::uint64_t> out;
    for (const auto& n : series) out.push_back(n.order());
    return out;
  }
};

/// Ascending Fitting series. Each step builds the quotient by the current
/// term with a coset action and computes a fresh character table there.
inline FittingData fitting_series(const ClassesPtr& classes, const TableOptions& opts = {}) {
  const PermGroup& g = classes->group();
  if (!is_solvable(g)) throw Unsupported("Fitting height is only defined here for solvable groups");
  FittingData out;
  std::vector<CosetAction> chain;
  PermGroup current = g;
  while (!current.is_trivial()) {
    const auto table = character_table(current, opts);
    const auto lattice = normal_subgroups(*table);
    const NormalSubgroup f = fitting_subgroup(lattice, opts.limits);
    PermGroup pulled = f.group();
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) pulled = it->preimage(pulled);
    out.series.push_back(normal_subgroup_from_group(classes, pulled));
    chain.push_back(coset_action(current, f.group(), opts.limits));
    current = chain.back().image();
  }
  out.height = out.series.size();
  for (std::size_t i = 0; i + 1 < out.series.size(); ++i) {
    if (!out.series[i].proper_subset_of(out.series[i + 1])) throw InternalError("Fitting series is not ascending");
  }
  return out;
}

inline FittingData fitting_series(const PermGroup& g, const TableOptions& opts = {}) {
  return fitting_series(conjugacy_classes(g, opts.limits), opts);
}

inline std::size_t fitting_height(const PermGroup& g, const TableOptions& opts = {}) {
  return fitting_series(g, opts).height;
}

/// Lazily computed table, lattice, codegrees and Fitting data of one group.
class GroupAnalysis {
 public:
  GroupAnalysis(std::string name, PermGroup group, TableOptions opts = {})
      : name_(std::move(name)), group_(std::move(group)), opts_(opts) {}

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const PermGroup& group() const noexcept { return group_; }
  [[nodiscard]] const TableOptions& options() const noexcept { return opts_; }

  const ClassesPtr& classes() {
    if (!classes_) classes_ = conjugacy_classes(group_, opts_.limits);
    return classes_;
  }
  const TablePtr& table_ptr() {
    if (!table_) table_ = character_table(classes(), opts_);
    return table_;
  }
  const CharacterTable& table() { return *table_ptr(); }

  const std::vector<NormalSubgroup>& lattice() {
    if (!lattice_) lattice_ = normal_subgroups(table());
    return *lattice_;
  }
  const CodegreeSet& codegrees() {
    if (!cods_) cods_ = codegree_set(table());
    return *cods_;
  }
  bool solvable() {
    if (!solvable_) solvable_ = is_solvable(group_);
    return *solvable_;
  }
  const NormalSubgroup& fitting() {
    if (!fitting_) fitting_ = fitting_subgroup(lattice(), opts_.limits);
    return *fitting_;
  }
  const NormalSubgroup& radical() {
    if (!radical_) radical_ = solvable_radical(lattice());
    return *radical_;
  }
  /// Throws Unsupported for non-solvable groups.
  const FittingData& fitting_data() {
    if (!series_) series_ = fitting_series(classes(), opts_);
    return *series_;
  }

 private:
  std::string name_;
  PermGroup group_;
  TableOptions opts_;
  ClassesPtr classes_;
  TablePtr table_;
  std::optional<std::vector<NormalSubgroup>> lattice_;
  std::optional<CodegreeSet> cods_;
  std::optional<bool> solvable_;
  std::optional<NormalSubgroup> fitting_;
  std::optional<NormalSubgroup> radical_;
  std::optional<FittingData> series_;
};

}  // namespace codeg
