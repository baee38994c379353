#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "sclab/element_set.hpp"
#include "sclab/lattice.hpp"

namespace sclab {

/// A finite poset, either a set of subgroups ordered by inclusion (with
/// G acting by conjugation) or an abstract poset on nodes 0..n-1.
class GPoset {
 public:
  GPoset() = default;

  /// Members are deduplicated and sorted into canonical lattice order.
  static GPoset of_subgroups(std::shared_ptr<const SubgroupLattice> lattice,
                             std::vector<SubgroupId> members);
  /// Abstract poset generated by the pairs (a < b). Throws Error on a cycle.
  static GPoset from_relation(std::size_t n,
                              const std::vector<std::pair<std::size_t, std::size_t>>& less_pairs);

  std::size_t size() const { return up_.size(); }
  bool empty() const { return up_.empty(); }
  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && up_[a].test(b); }
  /// {b : a <= b}
  const ElementSet& up_set(std::size_t a) const { return up_[a]; }

  bool has_lattice() const { return lattice_ != nullptr; }
  const SubgroupLattice& lattice() const { return *lattice_; }
  std::shared_ptr<const SubgroupLattice> lattice_ptr() const { return lattice_; }
  const std::vector<SubgroupId>& subgroups() const { return members_; }
  SubgroupId subgroup(std::size_t i) const { return members_[i]; }
  std::optional<std::size_t> index_of(SubgroupId h) const;
  bool contains(SubgroupId h) const { return index_of(h).has_value(); }

  /// Export label: lattice index for subgroup posets, node id otherwise.
  std::uint32_t label(std::size_t i) const;

  /// Subposet on the given nodes (kept in the given order if abstract).
  GPoset induced(const std::vector<std::size_t>& nodes) const;

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;

  /// Node of g·x·g^-1, or nullopt if it falls outside the poset (or abstract).
  std::optional<std::size_t> act(Element g, std::size_t i) const;
  /// Is the member set closed under conjugation by K?
  bool invariant_under(SubgroupId k) const;
  bool is_subposet_of(const GPoset& other) const;

  bool operator==(const GPoset& other) const;

 private:
  std::shared_ptr<const SubgroupLattice> lattice_;
  std::vector<SubgroupId> members_;
  std::vector<ElementSet> up_;
};

/// Elements fixed by every element of H: for subgroup posets, the members
/// normalized by H. Abstract posets carry no action and are returned as is.
GPoset fixed_point_subposet(const GPoset& p, SubgroupId h);

/// P_{>=x} / P_{>x}; x is any subgroup of the ambient lattice.
GPoset interval_above(const GPoset& p, SubgroupId x, bool strict = false);
/// P_{<=x} / P_{<x}
GPoset interval_below(const GPoset& p, SubgroupId x, bool strict = false);

struct Bound {
  SubgroupId subgroup;
  bool strict = false;
};

/// Members y with lower <= y <= upper (either bound optional).
GPoset bounded_between(const GPoset& p, std::optional<Bound> lower, std::optional<Bound> upper);

/// Node-index variants for abstract posets.
GPoset nodes_above(const GPoset& p, std::size_t x, bool strict);
GPoset nodes_below(const GPoset& p, std::size_t x, bool strict);

}  // namespace sclab
