#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sclab/collections.hpp"
#include "sclab/permutation.hpp"

// Brute-force reference implementations. Everything here works on raw
// permutations and std::set, straight from the definitions, and shares no
// code with the engine beyond Permutation multiplication.
namespace oracle {

using sclab::Permutation;
using Set = std::set<Permutation>;

struct NaiveGroup {
  std::size_t degree = 0;
  Permutation one;
  Set elements;
  std::vector<Set> subgroups;  // every subgroup, including 1 and G
};

Set close(const Set& seed, std::size_t degree);
std::size_t order_of(const Permutation& x);

/// All subgroups: closures of single elements, then H ∪ {x} closures until
/// nothing new appears.
NaiveGroup build(const std::vector<Permutation>& generators);

bool is_p_group(const Set& h, int p);
bool is_subset(const Set& a, const Set& b);
Set conjugate(const Permutation& g, const Set& h);
Set normalizer(const NaiveGroup& G, const Set& h);
Set centralizer(const NaiveGroup& G, const Set& h);
Set center(const Set& h);
/// Largest normal p-subgroup of h, found among all subgroups of G.
Set p_core(const NaiveGroup& G, const Set& h, int p);
std::size_t p_part(std::size_t n, int p);

Set E0(const NaiveGroup& G, int p);
Set E1(const NaiveGroup& G, int p);

bool is_elementary_abelian(const Set& h, int p);
bool is_p_radical(const NaiveGroup& G, const Set& r, int p);
bool is_p_centric(const NaiveGroup& G, const Set& r, int p);
bool is_principal(const NaiveGroup& G, const Set& r, int p);

/// Member sets of a collection, each subgroup given by its elements.
std::set<Set> collection(const NaiveGroup& G, int p, sclab::CollectionKind kind);

bool condition_cl(const NaiveGroup& G, int p);
bool condition_ch(const NaiveGroup& G, int p);
bool condition_m(const NaiveGroup& G, int p);

/// Ranks of every boundary matrix by Gaussian elimination over the rationals
/// and over F_2, on the facet list of a complex (dimension-indexed simplices).
struct Ranks {
  std::vector<std::size_t> rational;
  std::vector<std::size_t> mod2;
};
Ranks boundary_ranks(const std::vector<std::vector<std::vector<unsigned>>>& simplices_by_dim);

/// Reduced Betti numbers over Q from chain-group sizes and boundary ranks
/// (rank[d] is the rank of C_d -> C_{d-1}, rank[0] the augmentation).
std::vector<std::size_t> reduced_betti(const std::vector<std::size_t>& counts,
                                       const std::vector<std::size_t>& ranks);

}  // namespace oracle
