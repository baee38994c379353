#pragma once

#include <vector>

#include "sclab/lattice.hpp"

namespace sclab {

// Element-wise group-theoretic primitives over an enumerated lattice.
// Every result is a canonical SubgroupId of the same lattice.

SubgroupId normalizer(const SubgroupLattice& L, SubgroupId h);
SubgroupId centralizer_of_subgroup(const SubgroupLattice& L, SubgroupId h);
SubgroupId centralizer_of_element(const SubgroupLattice& L, Element x);
SubgroupId center(const SubgroupLattice& L, SubgroupId h);

/// N_Q(P) = Q ∩ N_G(P)
SubgroupId relative_normalizer(const SubgroupLattice& L, SubgroupId q, SubgroupId p);
/// C_H(K) = H ∩ C_G(K)
SubgroupId relative_centralizer(const SubgroupLattice& L, SubgroupId h, SubgroupId k);

/// Does every element of `by` normalize `h`?
bool normalizes(const SubgroupLattice& L, SubgroupId by, SubgroupId h);
bool is_normal_in(const SubgroupLattice& L, SubgroupId h, SubgroupId in);
bool is_abelian(const SubgroupLattice& L, SubgroupId h);
bool is_p_subgroup(const SubgroupLattice& L, SubgroupId h, int p);

/// Subgroup of Z(P) generated by its elements of order p. Throws NotAPGroup.
SubgroupId omega1_center(const SubgroupLattice& L, SubgroupId p_subgroup, int p);

/// O_p(H): the intersection of the Sylow p-subgroups of H.
SubgroupId p_core(const SubgroupLattice& L, SubgroupId h, int p);

bool is_elementary_abelian(const SubgroupLattice& L, SubgroupId h, int p);

/// AB for subgroups one of which normalizes the other. Throws NotMutuallyNormalizing.
SubgroupId subgroup_product(const SubgroupLattice& L, SubgroupId a, SubgroupId b);

SubgroupId generated_subgroup(const SubgroupLattice& L, const std::vector<Element>& xs);

/// Sylow p-subgroups of G. Throws PrimeDoesNotDivide.
std::vector<SubgroupId> sylow_p(const SubgroupLattice& L, int p);
/// Sylow p-subgroups of the subgroup h (p need not divide |h|).
std::vector<SubgroupId> sylow_p_of(const SubgroupLattice& L, SubgroupId h, int p);

/// {N_G(P) : 1 != P a p-subgroup}, deduplicated, canonical order.
std::vector<SubgroupId> p_local_subgroups(const SubgroupLattice& L, int p);

/// Nontrivial p-subgroups of G in canonical order.
std::vector<SubgroupId> nontrivial_p_subgroups(const SubgroupLattice& L, int p);

}  // namespace sclab
