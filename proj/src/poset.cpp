#include "sclab/poset.hpp"

#include <algorithm>

#include "sclab/errors.hpp"

namespace sclab {

GPoset GPoset::of_subgroups(std::shared_ptr<const SubgroupLattice> lattice,
                            std::vector<SubgroupId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  GPoset p;
  p.lattice_ = std::move(lattice);
  const std::size_t n = members.size();
  p.up_.assign(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    p.lattice_->at(members[i]);
    // canonical order sorts by order, so i <= j is only possible for j >= i
    for (std::size_t j = i; j < n; ++j)
      if (p.lattice_->leq(members[i], members[j])) p.up_[i].set(j);
  }
  p.members_ = std::move(members);
  return p;
}

GPoset GPoset::from_relation(std::size_t n,
                             const std::vector<std::pair<std::size_t, std::size_t>>& less_pairs) {
  GPoset p;
  p.up_.assign(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) p.up_[i].set(i);
  for (auto [a, b] : less_pairs) {
    if (a >= n || b >= n) throw Error("relation mentions a node outside 0.." + std::to_string(n - 1));
    p.up_[a].set(b);
  }
  // Warshall closure on bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.up_[i].test(k)) p.up_[i] |= p.up_[k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.up_[i].test(j) && p.up_[j].test(i))
        throw Error("relation has a cycle through nodes " + std::to_string(i) + " and " +
                    std::to_string(j));
  return p;
}

std::optional<std::size_t> GPoset::index_of(SubgroupId h) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), h);
  if (it == members_.end() || *it != h) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

std::uint32_t GPoset::label(std::size_t i) const {
  return has_lattice() ? members_[i].value : static_cast<std::uint32_t>(i);
}

GPoset GPoset::induced(const std::vector<std::size_t>& nodes) const {
  if (has_lattice()) {
    std::vector<SubgroupId> keep;
    keep.reserve(nodes.size());
    for (auto i : nodes) keep.push_back(members_[i]);
    return of_subgroups(lattice_, std::move(keep));
  }
  GPoset p;
  const std::size_t n = nodes.size();
  p.up_.assign(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq(nodes[a], nodes[b])) p.up_[a].set(b);
  return p;
}

std::vector<std::size_t> GPoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < size() && minimal; ++j)
      if (less(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> GPoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (up_[i].count() == 1) out.push_back(i);
  return out;
}

std::optional<std::size_t> GPoset::act(Element g, std::size_t i) const {
  if (!has_lattice()) return std::nullopt;
  return index_of(lattice_->conjugate(g, members_[i]));
}

bool GPoset::invariant_under(SubgroupId k) const {
  if (!has_lattice()) return true;
  for (Element g : lattice_->at(k).generators)
    for (std::size_t i = 0; i < size(); ++i)
      if (!act(g, i)) return false;
  return true;
}

bool GPoset::is_subposet_of(const GPoset& other) const {
  if (has_lattice() != other.has_lattice()) return false;
  if (has_lattice()) {
    if (lattice_.get() != other.lattice_.get()) return false;
    return std::all_of(members_.begin(), members_.end(),
                       [&](SubgroupId h) { return other.contains(h); });
  }
  return size() <= other.size();
}

bool GPoset::operator==(const GPoset& other) const {
  if (has_lattice() || other.has_lattice())
    return lattice_.get() == other.lattice_.get() && members_ == other.members_;
  return up_ == other.up_;
}

GPoset fixed_point_subposet(const GPoset& p, SubgroupId h) {
  if (!p.has_lattice()) return p;
  const SubgroupLattice& L = p.lattice();
  const auto& gens = L.at(h).generators;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const bool fixed = std::all_of(gens.begin(), gens.end(), [&](Element g) {
      return L.conjugate(g, p.subgroup(i)) == p.subgroup(i);
    });
    if (fixed) keep.push_back(i);
  }
  return p.induced(keep);
}

GPoset bounded_between(const GPoset& p, std::optional<Bound> lower, std::optional<Bound> upper) {
  if (!p.has_lattice()) throw Error("subgroup bounds need a subgroup poset");
  const SubgroupLattice& L = p.lattice();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const SubgroupId y = p.subgroup(i);
    if (lower && !(lower->strict ? L.less(lower->subgroup, y) : L.leq(lower->subgroup, y))) continue;
    if (upper && !(upper->strict ? L.less(y, upper->subgroup) : L.leq(y, upper->subgroup))) continue;
    keep.push_back(i);
  }
  return p.induced(keep);
}

GPoset interval_above(const GPoset& p, SubgroupId x, bool strict) {
  return bounded_between(p, Bound{x, strict}, std::nullopt);
}

GPoset interval_below(const GPoset& p, SubgroupId x, bool strict) {
  return bounded_between(p, std::nullopt, Bound{x, strict});
}

GPoset nodes_above(const GPoset& p, std::size_t x, bool strict) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (strict ? p.less(x, i) : p.leq(x, i)) keep.push_back(i);
  return p.induced(keep);
}

GPoset nodes_below(const GPoset& p, std::size_t x, bool strict) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (strict ? p.less(i, x) : p.leq(i, x)) keep.push_back(i);
  return p.induced(keep);
}

}  // namespace sclab
