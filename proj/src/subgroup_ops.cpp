#include "sclab/subgroup_ops.hpp"

#include <algorithm>

#include "sclab/errors.hpp"

namespace sclab {

namespace {

void require_p_divides(const SubgroupLattice& L, int p) {
  if (!is_prime(p) || L.group().order() % static_cast<std::size_t>(p) != 0)
    throw PrimeDoesNotDivide(p, L.group().order());
}

}  // namespace

SubgroupId normalizer(const SubgroupLattice& L, SubgroupId h) {
  const PermutationGroup& G = L.group();
  const Subgroup& H = L[h];
  ElementSet out(G.order());
  for (Element g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Element x : H.generators)
      if (!H.members.test(G.conj(g, x))) {
        ok = false;
        break;
      }
    if (ok) out.set(g);
  }
  return L.lookup(out);
}

SubgroupId centralizer_of_subgroup(const SubgroupLattice& L, SubgroupId h) {
  const PermutationGroup& G = L.group();
  ElementSet out(G.order());
  for (Element g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Element x : L[h].generators)
      if (!G.commute(g, x)) {
        ok = false;
        break;
      }
    if (ok) out.set(g);
  }
  return L.lookup(out);
}

SubgroupId centralizer_of_element(const SubgroupLattice& L, Element x) {
  const PermutationGroup& G = L.group();
  if (x >= G.order()) throw NotInLattice("element out of range");
  ElementSet out(G.order());
  for (Element g = 0; g < G.order(); ++g)
    if (G.commute(g, x)) out.set(g);
  return L.lookup(out);
}

SubgroupId center(const SubgroupLattice& L, SubgroupId h) {
  const PermutationGroup& G = L.group();
  const Subgroup& H = L[h];
  ElementSet out(G.order());
  H.members.for_each([&](std::size_t z) {
    for (Element x : H.generators)
      if (!G.commute(static_cast<Element>(z), x)) return;
    out.set(z);
  });
  return L.lookup(out);
}

SubgroupId relative_normalizer(const SubgroupLattice& L, SubgroupId q, SubgroupId p) {
  return L.meet(q, normalizer(L, p));
}

SubgroupId relative_centralizer(const SubgroupLattice& L, SubgroupId h, SubgroupId k) {
  return L.meet(h, centralizer_of_subgroup(L, k));
}

bool normalizes(const SubgroupLattice& L, SubgroupId by, SubgroupId h) {
  const PermutationGroup& G = L.group();
  for (Element g : L[by].generators)
    for (Element x : L[h].generators)
      if (!L[h].members.test(G.conj(g, x))) return false;
  return true;
}

bool is_normal_in(const SubgroupLattice& L, SubgroupId h, SubgroupId in) {
  return L.leq(h, in) && normalizes(L, in, h);
}

bool is_abelian(const SubgroupLattice& L, SubgroupId h) {
  const auto& gens = L[h].generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!L.group().commute(gens[i], gens[j])) return false;
  return true;
}

bool is_p_subgroup(const SubgroupLattice& L, SubgroupId h, int p) {
  return is_power_of(L[h].order, p);
}

SubgroupId omega1_center(const SubgroupLattice& L, SubgroupId p_subgroup, int p) {
  if (!is_p_subgroup(L, p_subgroup, p))
    throw NotAPGroup("subgroup of order " + std::to_string(L[p_subgroup].order) +
                     " is not a " + std::to_string(p) + "-group");
  const PermutationGroup& G = L.group();
  const SubgroupId z = center(L, p_subgroup);
  ElementSet out(G.order());
  L[z].members.for_each([&](std::size_t x) {
    if (G.element_order(static_cast<Element>(x)) <= static_cast<std::size_t>(p)) out.set(x);
  });
  // In an abelian p-group the elements of order dividing p form a subgroup.
  return L.lookup(out);
}

std::vector<SubgroupId> sylow_p_of(const SubgroupLattice& L, SubgroupId h, int p) {
  const std::size_t target = p_part(L[h].order, p);
  std::vector<SubgroupId> out;
  for (const auto& s : L.subgroups()) {
    if (s.order < target) continue;
    if (s.order > target) break;
    if (s.members.is_subset_of(L[h].members)) out.push_back(s.index);
  }
  return out;
}

std::vector<SubgroupId> sylow_p(const SubgroupLattice& L, int p) {
  require_p_divides(L, p);
  return sylow_p_of(L, L.whole(), p);
}

SubgroupId p_core(const SubgroupLattice& L, SubgroupId h, int p) {
  const auto sylows = sylow_p_of(L, h, p);
  ElementSet acc = L[sylows.front()].members;
  for (std::size_t i = 1; i < sylows.size(); ++i) acc &= L[sylows[i]].members;
  return L.lookup(acc);
}

bool is_elementary_abelian(const SubgroupLattice& L, SubgroupId h, int p) {
  if (!is_abelian(L, h)) return false;
  bool ok = true;
  L[h].members.for_each([&](std::size_t x) {
    if (x != 0 && L.group().element_order(static_cast<Element>(x)) != static_cast<std::size_t>(p))
      ok = false;
  });
  return ok;
}

SubgroupId subgroup_product(const SubgroupLattice& L, SubgroupId a, SubgroupId b) {
  if (!normalizes(L, a, b) && !normalizes(L, b, a))
    throw NotMutuallyNormalizing("neither subgroup normalizes the other");
  return L.join(a, b);
}

SubgroupId generated_subgroup(const SubgroupLattice& L, const std::vector<Element>& xs) {
  for (Element x : xs)
    if (x >= L.group().order()) throw NotInLattice("element out of range");
  return L.lookup(L.group().closure(xs));
}

std::vector<SubgroupId> p_local_subgroups(const SubgroupLattice& L, int p) {
  require_p_divides(L, p);
  std::vector<SubgroupId> out;
  for (SubgroupId q : nontrivial_p_subgroups(L, p)) out.push_back(normalizer(L, q));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SubgroupId> nontrivial_p_subgroups(const SubgroupLattice& L, int p) {
  std::vector<SubgroupId> out;
  for (const auto& s : L.subgroups())
    if (s.order > 1 && is_power_of(s.order, p)) out.push_back(s.index);
  return out;
}

}  // namespace sclab
