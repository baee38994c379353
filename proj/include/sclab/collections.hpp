#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sclab/element_set.hpp"
#include "sclab/lattice.hpp"

namespace sclab {

enum class CollectionKind {
  A,       // nontrivial elementary abelian p-subgroups
  S,       // nontrivial p-subgroups
  B,       // nontrivial p-radical subgroups
  Ce,      // p-centric subgroups
  Bcen,    // p-centric and p-radical
  D,       // principal p-radical
  E,       // elementary abelian subgroups inside E1(G)
  TildeA,
  TildeS,
  TildeB,
  HatA,
  HatS,
  HatB,
};

std::string_view to_string(CollectionKind kind);
std::optional<CollectionKind> parse_collection_kind(std::string_view name);
std::vector<CollectionKind> all_collection_kinds();

/// A conjugation-closed set of nontrivial p-subgroups, members in canonical order.
struct Collection {
  CollectionKind kind;
  int prime = 0;
  std::vector<SubgroupId> members;

  bool contains(SubgroupId id) const;
  std::size_t size() const { return members.size(); }
};

enum class Condition { M, Cl, Ch };

std::string_view to_string(Condition c);

struct ConditionWitness {
  std::string description;
  std::vector<SubgroupId> subgroups;
  std::vector<Element> elements;
};

struct ConditionReport {
  Condition condition;
  bool holds = true;
  /// Empty iff holds; first entries are the first failures in canonical order.
  std::vector<ConditionWitness> witnesses;
};

struct EqualitiesReport {
  /// False when (Ch) fails and the equalities are not claimed.
  bool applicable = false;
  bool equal = false;
  std::vector<SubgroupId> common;
  /// A subgroup in the symmetric difference, when not equal.
  std::optional<SubgroupId> counterexample;
};

/// All p-local data of a group for one prime, computed once.
///
/// Normalizers, centralizers and centers of every subgroup are tabulated at
/// construction, together with E0(G), E1(G) and the tilde/hat operators on
/// every p-subgroup. The object is immutable afterwards.
class PrimeAnalysis {
 public:
  /// Throws PrimeDoesNotDivide unless p is a prime dividing |G|.
  PrimeAnalysis(std::shared_ptr<const SubgroupLattice> lattice, int p);

  const SubgroupLattice& lattice() const { return *lattice_; }
  std::shared_ptr<const SubgroupLattice> lattice_ptr() const { return lattice_; }
  const PermutationGroup& group() const { return lattice_->group(); }
  int prime() const { return p_; }

  SubgroupId normalizer(SubgroupId h) const { return normalizer_[h.value]; }
  SubgroupId centralizer(SubgroupId h) const { return centralizer_[h.value]; }
  SubgroupId center(SubgroupId h) const { return center_[h.value]; }
  /// O_p(N_G(P)) for a p-subgroup P.
  SubgroupId normalizer_core(SubgroupId p_subgroup) const;
  bool is_p_subgroup(SubgroupId h) const;

  /// Elements of order p central in some Sylow p-subgroup.
  const ElementSet& E0() const { return e0_; }
  /// Least superset of E0 closed under conjugation and under products of
  /// commuting members that have order p.
  const ElementSet& E1() const { return e1_; }

  /// Ω1Z(P) ∩ E1(G), together with the identity. Throws NotAPGroup.
  SubgroupId tilde_of(SubgroupId p_subgroup) const;
  /// Subgroup generated by Ω1Z(P) ∩ E0(G). Throws NotAPGroup.
  SubgroupId hat_of(SubgroupId p_subgroup) const;
  SubgroupId omega1_center(SubgroupId p_subgroup) const;

  bool is_p_radical(SubgroupId h) const;
  bool is_p_centric(SubgroupId h) const;
  bool is_principal_p_radical(SubgroupId h) const;
  bool is_distinguished(SubgroupId h) const;

  const std::vector<SubgroupId>& sylows() const { return sylows_; }
  const std::vector<SubgroupId>& p_subgroups() const { return p_subgroups_; }
  const std::vector<SubgroupId>& p_locals() const { return p_locals_; }

  Collection build_collection(CollectionKind kind) const;
  ConditionReport check_condition(Condition which) const;
  /// B_p = B̂_p = B^cen_p, expected whenever (Ch) holds.
  EqualitiesReport equalities_under_ch() const;

  /// True when every element of order p is conjugate to one fixed element.
  bool one_class_of_order_p() const;

 private:
  void require_p_subgroup(SubgroupId h) const;

  std::shared_ptr<const SubgroupLattice> lattice_;
  int p_;
  std::vector<SubgroupId> normalizer_, centralizer_, center_;
  std::vector<SubgroupId> sylows_, p_subgroups_, p_locals_;
  std::vector<std::optional<SubgroupId>> norm_core_, tilde_, hat_, omega_;
  std::vector<char> principal_;
  ElementSet e0_, e1_;
};

/// Free-function spellings of the element-set constructions.
ElementSet compute_E0(const SubgroupLattice& L, int p);
ElementSet compute_E1(const SubgroupLattice& L, int p);

/// O_p of N/K realized as a permutation group on the cosets of K, K normal in N.
/// Returns the order of that p-core.
std::size_t quotient_p_core_order(const SubgroupLattice& L, SubgroupId n, SubgroupId k, int p);

}  // namespace sclab
