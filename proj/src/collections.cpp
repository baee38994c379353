#include "sclab/collections.hpp"

#include <algorithm>

#include "sclab/errors.hpp"
#include "sclab/subgroup_ops.hpp"

namespace sclab {

namespace {

constexpr std::size_t kMaxWitnesses = 8;

struct KindName {
  CollectionKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {CollectionKind::A, "A"},           {CollectionKind::S, "S"},
    {CollectionKind::B, "B"},           {CollectionKind::Ce, "Ce"},
    {CollectionKind::Bcen, "Bcen"},     {CollectionKind::D, "D"},
    {CollectionKind::E, "E"},           {CollectionKind::TildeA, "tilde-A"},
    {CollectionKind::TildeS, "tilde-S"}, {CollectionKind::TildeB, "tilde-B"},
    {CollectionKind::HatA, "hat-A"},    {CollectionKind::HatS, "hat-S"},
    {CollectionKind::HatB, "hat-B"},
};

}  // namespace

std::string_view to_string(CollectionKind kind) {
  for (const auto& kn : kKindNames)
    if (kn.kind == kind) return kn.name;
  return "?";
}

std::optional<CollectionKind> parse_collection_kind(std::string_view name) {
  for (const auto& kn : kKindNames)
    if (kn.name == name) return kn.kind;
  if (name == "E_Benson") return CollectionKind::E;
  return std::nullopt;
}

std::vector<CollectionKind> all_collection_kinds() {
  std::vector<CollectionKind> out;
  for (const auto& kn : kKindNames) out.push_back(kn.kind);
  return out;
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::M:
      return "M";
    case Condition::Cl:
      return "Cl";
    case Condition::Ch:
      return "Ch";
  }
  return "?";
}

bool Collection::contains(SubgroupId id) const {
  return std::binary_search(members.begin(), members.end(), id);
}

ElementSet compute_E0(const SubgroupLattice& L, int p) {
  const PermutationGroup& G = L.group();
  ElementSet e0(G.order());
  for (SubgroupId s : sylow_p(L, p)) {
    L[center(L, s)].members.for_each([&](std::size_t x) {
      if (G.element_order(static_cast<Element>(x)) == static_cast<std::size_t>(p)) e0.set(x);
    });
  }
  return e0;
}

ElementSet compute_E1(const SubgroupLattice& L, int p) {
  const PermutationGroup& G = L.group();
  ElementSet e1 = compute_E0(L, p);
  std::vector<Element> list;
  e1.for_each([&](std::size_t x) { list.push_back(static_cast<Element>(x)); });
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t n = list.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (Element g : G.generator_elements()) {
        const Element y = G.conj(g, list[i]);
        if (!e1.test(y)) {
          e1.set(y);
          list.push_back(y);
          changed = true;
        }
      }
      for (std::size_t j = i; j < n; ++j) {
        if (!G.commute(list[i], list[j])) continue;
        const Element xy = G.mul(list[i], list[j]);
        if (G.element_order(xy) != static_cast<std::size_t>(p) || e1.test(xy)) continue;
        e1.set(xy);
        list.push_back(xy);
        changed = true;
      }
    }
  }
  return e1;
}

std::size_t quotient_p_core_order(const SubgroupLattice& L, SubgroupId n, SubgroupId k, int p) {
  const PermutationGroup& G = L.group();
  const std::size_t index = L[n].order / L[k].order;
  if (index % static_cast<std::size_t>(p) != 0) return 1;

  // Left cosets xK of K in N.
  std::vector<std::uint32_t> coset_of(G.order(), UINT32_MAX);
  std::vector<Element> reps;
  L[n].members.for_each([&](std::size_t x) {
    if (coset_of[x] != UINT32_MAX) return;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(static_cast<Element>(x));
    L[k].members.for_each([&](std::size_t y) {
      coset_of[G.mul(static_cast<Element>(x), static_cast<Element>(y))] = c;
    });
  });
  std::vector<Permutation> action;
  for (Element g : L[n].generators) {
    std::vector<Point> im(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) im[c] = coset_of[G.mul(g, reps[c])];
    action.emplace_back(std::move(im));
  }
  if (action.empty()) action.push_back(Permutation::identity(reps.size()));
  auto Q = std::make_shared<const PermutationGroup>(PermutationGroup::generate(
      std::move(action), "quotient", GroupLimits{G.order(), SIZE_MAX}));
  if (Q->order() != index) throw Error("coset action is not faithful on N/K");
  const SubgroupLattice QL = SubgroupLattice::enumerate(Q, GroupLimits{G.order(), SIZE_MAX});
  return QL[p_core(QL, QL.whole(), p)].order;
}

PrimeAnalysis::PrimeAnalysis(std::shared_ptr<const SubgroupLattice> lattice, int p)
    : lattice_(std::move(lattice)), p_(p) {
  const SubgroupLattice& L = *lattice_;
  if (!is_prime(p) || L.group().order() % static_cast<std::size_t>(p) != 0)
    throw PrimeDoesNotDivide(p, L.group().order());

  const std::size_t n = L.size();
  normalizer_.reserve(n);
  centralizer_.reserve(n);
  center_.reserve(n);
  for (const auto& s : L.subgroups()) {
    normalizer_.push_back(sclab::normalizer(L, s.index));
    centralizer_.push_back(centralizer_of_subgroup(L, s.index));
    center_.push_back(L.meet(s.index, centralizer_.back()));
  }
  sylows_ = sylow_p(L, p);
  p_subgroups_ = nontrivial_p_subgroups(L, p);

  e0_ = compute_E0(L, p);
  e1_ = compute_E1(L, p);

  norm_core_.assign(n, std::nullopt);
  tilde_.assign(n, std::nullopt);
  hat_.assign(n, std::nullopt);
  omega_.assign(n, std::nullopt);
  principal_.assign(n, 0);

  const PermutationGroup& G = L.group();
  std::vector<SubgroupId> p_group_ids = p_subgroups_;
  p_group_ids.insert(p_group_ids.begin(), L.trivial());
  for (SubgroupId q : p_group_ids) {
    norm_core_[q.value] = p_core(L, normalizer_[q.value], p);

    ElementSet omega(G.order()), tilde(G.order()), hat_gens(G.order());
    omega.set(0);
    tilde.set(0);
    L[center_[q.value]].members.for_each([&](std::size_t x) {
      if (G.element_order(static_cast<Element>(x)) != static_cast<std::size_t>(p)) return;
      omega.set(x);
      if (e1_.test(x)) tilde.set(x);
      if (e0_.test(x)) hat_gens.set(x);
    });
    omega_[q.value] = L.lookup(omega);
    auto t = L.find(tilde);
    if (!t) throw Error("Ω1Z(P) ∩ E1(G) is not closed under products");
    tilde_[q.value] = *t;
    hat_[q.value] = L.lookup(G.closure(hat_gens));
  }

  for (SubgroupId q : p_subgroups_) {
    if (!is_p_centric(q)) continue;
    const SubgroupId k = L.join(q, centralizer_[q.value]);
    principal_[q.value] = quotient_p_core_order(L, normalizer_[q.value], k, p) == 1;
  }

  for (SubgroupId q : p_subgroups_) p_locals_.push_back(normalizer_[q.value]);
  std::sort(p_locals_.begin(), p_locals_.end());
  p_locals_.erase(std::unique(p_locals_.begin(), p_locals_.end()), p_locals_.end());
}

void PrimeAnalysis::require_p_subgroup(SubgroupId h) const {
  if (!is_p_subgroup(h))
    throw NotAPGroup("subgroup " + std::to_string(h.value) + " of order " +
                     std::to_string(lattice()[h].order) + " is not a " + std::to_string(p_) +
                     "-group");
}

bool PrimeAnalysis::is_p_subgroup(SubgroupId h) const {
  return is_power_of(lattice().at(h).order, p_);
}

SubgroupId PrimeAnalysis::normalizer_core(SubgroupId p_subgroup) const {
  require_p_subgroup(p_subgroup);
  return *norm_core_[p_subgroup.value];
}

SubgroupId PrimeAnalysis::tilde_of(SubgroupId p_subgroup) const {
  require_p_subgroup(p_subgroup);
  return *tilde_[p_subgroup.value];
}

SubgroupId PrimeAnalysis::hat_of(SubgroupId p_subgroup) const {
  require_p_subgroup(p_subgroup);
  return *hat_[p_subgroup.value];
}

SubgroupId PrimeAnalysis::omega1_center(SubgroupId p_subgroup) const {
  require_p_subgroup(p_subgroup);
  return *omega_[p_subgroup.value];
}

bool PrimeAnalysis::is_p_radical(SubgroupId h) const {
  return is_p_subgroup(h) && *norm_core_[h.value] == h;
}

bool PrimeAnalysis::is_p_centric(SubgroupId h) const {
  if (!is_p_subgroup(h)) return false;
  const std::size_t z = lattice()[center_[h.value]].order;
  return z == p_part(lattice()[centralizer_[h.value]].order, p_);
}

bool PrimeAnalysis::is_principal_p_radical(SubgroupId h) const {
  return is_p_subgroup(h) && principal_[h.value];
}

bool PrimeAnalysis::is_distinguished(SubgroupId h) const {
  return is_p_subgroup(h) && *hat_[h.value] != lattice().trivial();
}

bool PrimeAnalysis::one_class_of_order_p() const {
  const PermutationGroup& G = group();
  std::optional<Element> first;
  std::size_t count = 0;
  for (Element x = 0; x < G.order(); ++x)
    if (G.element_order(x) == static_cast<std::size_t>(p_)) {
      if (!first) first = x;
      ++count;
    }
  if (!first) return true;
  ElementSet cls(G.order());
  for (Element g = 0; g < G.order(); ++g) cls.set(G.conj(g, *first));
  return cls.count() == count;
}

Collection PrimeAnalysis::build_collection(CollectionKind kind) const {
  const SubgroupLattice& L = lattice();
  Collection c{kind, p_, {}};
  const SubgroupId one = L.trivial();
  for (SubgroupId q : p_subgroups_) {
    bool in = false;
    switch (kind) {
      case CollectionKind::S:
        in = true;
        break;
      case CollectionKind::A:
        in = is_elementary_abelian(L, q, p_);
        break;
      case CollectionKind::B:
        in = is_p_radical(q);
        break;
      case CollectionKind::Ce:
        in = is_p_centric(q);
        break;
      case CollectionKind::Bcen:
        in = is_p_centric(q) && is_p_radical(q);
        break;
      case CollectionKind::D:
        in = is_principal_p_radical(q);
        break;
      case CollectionKind::E: {
        ElementSet rest = L[q].members;
        rest.reset(0);
        in = is_elementary_abelian(L, q, p_) && rest.is_subset_of(e1_);
        break;
      }
      case CollectionKind::TildeA:
        in = is_elementary_abelian(L, q, p_) && *tilde_[q.value] != one;
        break;
      case CollectionKind::TildeS:
        in = *tilde_[q.value] != one;
        break;
      case CollectionKind::TildeB:
        in = is_p_radical(q) && *tilde_[q.value] != one;
        break;
      case CollectionKind::HatA:
        in = is_elementary_abelian(L, q, p_) && *hat_[q.value] != one;
        break;
      case CollectionKind::HatS:
        in = *hat_[q.value] != one;
        break;
      case CollectionKind::HatB:
        in = is_p_radical(q) && *hat_[q.value] != one;
        break;
    }
    if (in) c.members.push_back(q);
  }
  return c;
}

ConditionReport PrimeAnalysis::check_condition(Condition which) const {
  const SubgroupLattice& L = lattice();
  const PermutationGroup& G = group();
  const std::size_t sylow_order = p_part(G.order(), p_);
  ConditionReport report{which, true, {}};
  auto fail = [&](ConditionWitness w) {
    report.holds = false;
    if (report.witnesses.size() < kMaxWitnesses) report.witnesses.push_back(std::move(w));
  };

  switch (which) {
    case Condition::M: {
      for (SubgroupId q : build_collection(CollectionKind::HatS).members) {
        const SubgroupId n = normalizer_[q.value];
        const bool ok = std::any_of(p_locals_.begin(), p_locals_.end(), [&](SubgroupId m) {
          return p_part(L[m].order, p_) == sylow_order && L.leq(n, m);
        });
        if (!ok)
          fail({"N_G(P) lies in no p-local subgroup containing a Sylow p-subgroup", {q, n}, {}});
      }
      break;
    }
    case Condition::Cl: {
      std::vector<Element> e0;
      e0_.for_each([&](std::size_t x) { e0.push_back(static_cast<Element>(x)); });
      for (std::size_t i = 0; i < e0.size(); ++i)
        for (std::size_t j = i; j < e0.size(); ++j) {
          if (!G.commute(e0[i], e0[j])) continue;
          const Element xy = G.mul(e0[i], e0[j]);
          if (G.element_order(xy) == static_cast<std::size_t>(p_) && !e0_.test(xy))
            fail({"commuting central-type elements whose product of order p is not of central type",
                  {},
                  {e0[i], e0[j], xy}});
        }
      break;
    }
    case Condition::Ch: {
      for (SubgroupId h : p_locals_) {
        const SubgroupId o = p_core(L, h, p_);
        const SubgroupId c = L.meet(h, centralizer_[o.value]);
        if (!L.leq(c, o)) fail({"C_H(O_p(H)) is not contained in O_p(H)", {h, o, c}, {}});
      }
      break;
    }
  }
  return report;
}

EqualitiesReport PrimeAnalysis::equalities_under_ch() const {
  EqualitiesReport r;
  r.applicable = check_condition(Condition::Ch).holds;
  const auto b = build_collection(CollectionKind::B).members;
  const auto bhat = build_collection(CollectionKind::HatB).members;
  const auto bcen = build_collection(CollectionKind::Bcen).members;
  r.equal = b == bhat && bhat == bcen;
  if (r.equal) {
    r.common = b;
  } else {
    std::vector<SubgroupId> diff;
    std::set_symmetric_difference(b.begin(), b.end(), bcen.begin(), bcen.end(),
                                  std::back_inserter(diff));
    std::set_symmetric_difference(b.begin(), b.end(), bhat.begin(), bhat.end(),
                                  std::back_inserter(diff));
    std::sort(diff.begin(), diff.end());
    if (!diff.empty()) r.counterexample = diff.front();
  }
  return r;
}

}  // namespace sclab
