#include "sclab/lattice.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "sclab/errors.hpp"

namespace sclab {

namespace {

// Closure of the group `base` together with extra generators.
ElementSet extend_closure(const PermutationGroup& G, const ElementSet& base,
                          const std::vector<Element>& gens) {
  ElementSet out = base;
  std::vector<Element> stack;
  base.for_each([&](std::size_t x) { stack.push_back(static_cast<Element>(x)); });
  while (!stack.empty()) {
    const Element x = stack.back();
    stack.pop_back();
    for (Element g : gens) {
      const Element y = G.mul(x, g);
      if (!out.test(y)) {
        out.set(y);
        stack.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

SubgroupLattice SubgroupLattice::enumerate(std::shared_ptr<const PermutationGroup> group,
                                           const GroupLimits& limits) {
  const PermutationGroup& G = *group;
  if (G.order() > limits.max_order)
    throw CapExceeded("group order " + std::to_string(G.order()) + " exceeds cap " +
                      std::to_string(limits.max_order));

  std::vector<std::pair<ElementSet, std::vector<Element>>> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  auto add = [&](ElementSet s, std::vector<Element> gens) -> bool {
    if (seen.count(s)) return false;
    if (found.size() >= limits.max_subgroups)
      throw CapExceeded("subgroup lattice exceeds cap " + std::to_string(limits.max_subgroups));
    seen.emplace(s, found.size());
    found.emplace_back(std::move(s), std::move(gens));
    return true;
  };

  ElementSet trivial(G.order());
  trivial.set(0);
  add(trivial, {});

  std::vector<std::size_t> cyclic;
  for (std::size_t x = 1; x < G.order(); ++x) {
    ElementSet c = G.closure(std::vector<Element>{static_cast<Element>(x)});
    if (add(c, {static_cast<Element>(x)})) cyclic.push_back(found.size() - 1);
  }
  // Snapshot of cyclic subgroups: every subgroup is a join of cyclic ones.
  std::vector<std::pair<ElementSet, Element>> cyc;
  for (std::size_t k : cyclic) cyc.emplace_back(found[k].first, found[k].second.front());

  std::deque<std::size_t> queue(cyclic.begin(), cyclic.end());
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (const auto& [cset, cgen] : cyc) {
      if (cset.is_subset_of(found[k].first)) continue;
      ElementSet j = extend_closure(G, found[k].first, [&] {
        auto g = found[k].second;
        g.push_back(cgen);
        return g;
      }());
      if (seen.count(j)) continue;
      auto gens = found[k].second;
      gens.push_back(cgen);
      add(std::move(j), std::move(gens));
      queue.push_back(found.size() - 1);
    }
  }

  SubgroupLattice L;
  L.group_ = std::move(group);
  L.finalize(std::move(found));
  return L;
}

SubgroupLattice SubgroupLattice::from_member_sets(std::shared_ptr<const PermutationGroup> group,
                                                  std::vector<std::vector<Element>> generators) {
  const PermutationGroup& G = *group;
  std::vector<std::pair<ElementSet, std::vector<Element>>> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  for (auto& gens : generators) {
    for (Element g : gens)
      if (g >= G.order()) throw Error("cached generator out of range");
    ElementSet s = G.closure(gens);
    if (seen.count(s)) throw Error("duplicate subgroup in cached lattice");
    seen.emplace(s, found.size());
    found.emplace_back(std::move(s), std::move(gens));
  }
  SubgroupLattice L;
  L.group_ = std::move(group);
  L.finalize(std::move(found));
  return L;
}

void SubgroupLattice::finalize(std::vector<std::pair<ElementSet, std::vector<Element>>> found) {
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    const std::size_t ca = a.first.count(), cb = b.first.count();
    if (ca != cb) return ca < cb;
    return a.first < b.first;
  });
  subgroups_.clear();
  index_.clear();
  subgroups_.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    Subgroup s;
    s.order = found[i].first.count();
    s.members = std::move(found[i].first);
    s.generators = std::move(found[i].second);
    s.index = SubgroupId{static_cast<std::uint32_t>(i)};
    index_.emplace(s.members, s.index);
    subgroups_.push_back(std::move(s));
  }

  // Conjugacy classes by orbit search under the generators of G.
  const PermutationGroup& G = *group_;
  std::vector<bool> done(subgroups_.size(), false);
  classes_.clear();
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (done[i]) continue;
    const std::size_t cls = classes_.size();
    classes_.emplace_back();
    std::vector<std::size_t> stack{i};
    done[i] = true;
    subgroups_[i].conjugacy_class = cls;
    subgroups_[i].conjugator = PermutationGroup::identity();
    while (!stack.empty()) {
      const std::size_t k = stack.back();
      stack.pop_back();
      classes_[cls].push_back(subgroups_[k].index);
      for (Element g : G.generator_elements()) {
        const SubgroupId c = conjugate(g, subgroups_[k].index);
        if (!done[c.value]) {
          done[c.value] = true;
          subgroups_[c.value].conjugacy_class = cls;
          subgroups_[c.value].conjugator = G.mul(g, subgroups_[k].conjugator);
          stack.push_back(c.value);
        }
      }
    }
    std::sort(classes_[cls].begin(), classes_[cls].end());
  }
}

const Subgroup& SubgroupLattice::at(SubgroupId id) const {
  if (id.value >= subgroups_.size()) throw NotInLattice("subgroup id out of range");
  return subgroups_[id.value];
}

std::optional<SubgroupId> SubgroupLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubgroupId SubgroupLattice::lookup(const ElementSet& members) const {
  if (auto id = find(members)) return *id;
  throw NotInLattice("element set is not a subgroup in the lattice");
}

ElementSet SubgroupLattice::conjugate_set(Element g, const ElementSet& s) const {
  ElementSet out(group_->order());
  s.for_each([&](std::size_t x) { out.set(group_->conj(g, static_cast<Element>(x))); });
  return out;
}

SubgroupId SubgroupLattice::conjugate(Element g, SubgroupId h) const {
  return lookup(conjugate_set(g, subgroups_[h.value].members));
}

SubgroupId SubgroupLattice::join(SubgroupId a, SubgroupId b) const {
  if (leq(a, b)) return b;
  if (leq(b, a)) return a;
  std::vector<Element> gens = subgroups_[a.value].generators;
  gens.insert(gens.end(), subgroups_[b.value].generators.begin(),
              subgroups_[b.value].generators.end());
  return lookup(extend_closure(*group_, subgroups_[a.value].members, gens));
}

SubgroupId SubgroupLattice::meet(SubgroupId a, SubgroupId b) const {
  return lookup(subgroups_[a.value].members & subgroups_[b.value].members);
}

std::vector<SubgroupId> SubgroupLattice::subgroups_of(SubgroupId h) const {
  std::vector<SubgroupId> out;
  const std::size_t n = subgroups_[h.value].order;
  for (const auto& s : subgroups_) {
    if (s.order > n) break;
    if (n % s.order == 0 && s.members.is_subset_of(subgroups_[h.value].members))
      out.push_back(s.index);
  }
  return out;
}

}  // namespace sclab
