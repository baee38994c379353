#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "sclab/errors.hpp"
#include "sclab/lattice.hpp"
#include "sclab/permutation.hpp"
#include "sclab/subgroup_ops.hpp"
#include "oracle.hpp"

namespace testkit {

inline sclab::Element elem(const sclab::SubgroupLattice& L, const std::string& cycles) {
  const auto& G = L.group();
  auto x = G.index_of(sclab::parse_cycles(cycles, G.degree()));
  if (!x) throw sclab::Error("element " + cycles + " is not in the group");
  return *x;
}

/// Subgroup generated by elements written in cycle notation.
inline sclab::SubgroupId gen(const sclab::SubgroupLattice& L,
                             std::initializer_list<const char*> cycles) {
  std::vector<sclab::Element> xs;
  for (const char* c : cycles) xs.push_back(elem(L, c));
  return sclab::generated_subgroup(L, xs);
}

inline std::vector<sclab::SubgroupId> of_order(const sclab::SubgroupLattice& L, std::size_t n) {
  std::vector<sclab::SubgroupId> out;
  for (const auto& s : L.subgroups())
    if (s.order == n) out.push_back(s.index);
  return out;
}

/// Elements of a lattice subgroup as raw permutations, for oracle comparisons.
inline oracle::Set as_set(const sclab::SubgroupLattice& L, sclab::SubgroupId h) {
  oracle::Set out;
  L[h].members.for_each(
      [&](std::size_t x) { out.insert(L.group().element(static_cast<sclab::Element>(x))); });
  return out;
}

inline std::set<oracle::Set> as_sets(const sclab::SubgroupLattice& L,
                                     const std::vector<sclab::SubgroupId>& hs) {
  std::set<oracle::Set> out;
  for (auto h : hs) out.insert(as_set(L, h));
  return out;
}

inline oracle::Set as_set(const sclab::SubgroupLattice& L, const sclab::ElementSet& xs) {
  oracle::Set out;
  xs.for_each([&](std::size_t x) { out.insert(L.group().element(static_cast<sclab::Element>(x))); });
  return out;
}

}  // namespace testkit
