#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sclab/element_set.hpp"
#include "sclab/group.hpp"

namespace sclab {

/// Position of a subgroup in the canonical lattice order.
struct SubgroupId {
  std::uint32_t value = 0;

  friend auto operator<=>(SubgroupId, SubgroupId) = default;
};

struct SubgroupIdHash {
  std::size_t operator()(SubgroupId id) const { return std::hash<std::uint32_t>{}(id.value); }
};

/// A subgroup of the ambient group, canonicalized by its member bitset.
struct Subgroup {
  ElementSet members;
  SubgroupId index;
  std::size_t order = 0;
  /// A generating set (first found during enumeration).
  std::vector<Element> generators;
  std::size_t conjugacy_class = 0;
  /// g with g * rep * g^-1 == this subgroup, rep being the first member of its class.
  Element conjugator = 0;
};

/// Every subgroup of a finite permutation group, in canonical order:
/// by order, then by the lexicographic order of the member lists.
class SubgroupLattice {
 public:
  /// Bottom-up enumeration: cyclic subgroups, then joins with cyclic
  /// subgroups until nothing new appears.
  static SubgroupLattice enumerate(std::shared_ptr<const PermutationGroup> group,
                                   const GroupLimits& limits = {});

  /// Rebuilds a lattice from a previously enumerated member list (cache
  /// loads). Every set is re-checked for closure.
  static SubgroupLattice from_member_sets(std::shared_ptr<const PermutationGroup> group,
                                          std::vector<std::vector<Element>> generators);

  const PermutationGroup& group() const { return *group_; }
  std::shared_ptr<const PermutationGroup> group_ptr() const { return group_; }

  std::size_t size() const { return subgroups_.size(); }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const Subgroup& operator[](SubgroupId id) const { return subgroups_[id.value]; }
  const Subgroup& at(SubgroupId id) const;

  SubgroupId trivial() const { return SubgroupId{0}; }
  SubgroupId whole() const { return SubgroupId{static_cast<std::uint32_t>(subgroups_.size() - 1)}; }

  std::optional<SubgroupId> find(const ElementSet& members) const;
  /// Throws NotInLattice when `members` is not a subgroup.
  SubgroupId lookup(const ElementSet& members) const;

  /// a <= b
  bool leq(SubgroupId a, SubgroupId b) const {
    return subgroups_[a.value].members.is_subset_of(subgroups_[b.value].members);
  }
  bool less(SubgroupId a, SubgroupId b) const { return a != b && leq(a, b); }

  SubgroupId conjugate(Element g, SubgroupId h) const;
  ElementSet conjugate_set(Element g, const ElementSet& s) const;

  /// Subgroup generated by a and b.
  SubgroupId join(SubgroupId a, SubgroupId b) const;
  SubgroupId meet(SubgroupId a, SubgroupId b) const;

  const std::vector<std::vector<SubgroupId>>& conjugacy_classes() const { return classes_; }

  /// Subgroups of h (including h), in canonical order.
  std::vector<SubgroupId> subgroups_of(SubgroupId h) const;

 private:
  void finalize(std::vector<std::pair<ElementSet, std::vector<Element>>> found);

  std::shared_ptr<const PermutationGroup> group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, SubgroupId, ElementSetHash> index_;
  std::vector<std::vector<SubgroupId>> classes_;
};

}  // namespace sclab
