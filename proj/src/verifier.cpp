#include "sclab/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "sclab/errors.hpp"
#include "sclab/lattice_cache.hpp"
#include "sclab/order_complex.hpp"
#include "sclab/subgroup_ops.hpp"

namespace sclab {

namespace {

constexpr std::size_t kMaxFailures = 8;

using SubgroupFn = std::function<SubgroupId(SubgroupId)>;

}  // namespace

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Table31:
      return "table31";
    case Suite::Table44:
      return "table44";
    case Suite::Counterexamples:
      return "counterexamples";
    case Suite::Inclusions:
      return "inclusions";
    case Suite::Conditions:
      return "conditions";
    case Suite::All:
      return "all";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::Table31, Suite::Table44, Suite::Counterexamples, Suite::Inclusions,
                  Suite::Conditions, Suite::All})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::string_view to_string(LineStyle s) {
  switch (s) {
    case LineStyle::Solid:
      return "solid";
    case LineStyle::Dashed:
      return "dashed";
    case LineStyle::Dotted:
      return "dotted";
  }
  return "?";
}

std::string_view to_string(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::Certified:
      return "CERTIFIED";
    case EdgeStatus::HomologyConsistent:
      return "HOMOLOGY-CONSISTENT";
    case EdgeStatus::Skipped:
      return "SKIPPED";
    case EdgeStatus::Mismatch:
      return "MISMATCH";
    case EdgeStatus::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

std::string EdgeResult::name() const {
  if (vertical) return table + " column " + line + ": " + from + " -- " + to;
  return table + " row " + line + ": " + from + " -- " + to;
}

std::string describe_subgroup(const SubgroupLattice& L, SubgroupId h) {
  const auto& s = L.at(h);
  if (s.order == 1) return "1";
  std::string out = "<";
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    if (i) out += ", ";
    out += L.group().element(s.generators[i]).to_cycle_string();
  }
  return out + ">";
}

bool looks_like_d8(const SubgroupLattice& L) { return L.group().order() == 8 && L.size() == 10; }

bool Report::has_mismatch() const {
  for (const auto& e : edges)
    if (e.status == EdgeStatus::Mismatch) return true;
  for (const auto& i : inclusions)
    if (i.applicable && !i.holds) return true;
  for (const auto& h : homology)
    if (h.required && h.complete && !h.agree) return true;
  for (const auto& c : counterexamples)
    if (!c.reproduced) return true;
  return false;
}

bool Report::has_inconclusive() const {
  return std::any_of(edges.begin(), edges.end(),
                     [](const EdgeResult& e) { return e.status == EdgeStatus::Inconclusive; }) ||
         std::any_of(homology.begin(), homology.end(), [](const HomologyCheck& h) { return !h.complete; });
}

int exit_code(const Report& r, bool strict) {
  if (r.has_mismatch()) return exit_codes::kMismatch;
  if (strict && r.has_inconclusive()) return exit_codes::kInconclusive;
  return exit_codes::kOk;
}

namespace {

// Everything the edge checks share; immutable once built.
struct Context {
  std::shared_ptr<const SubgroupLattice> lattice_ptr;
  const SubgroupLattice& L;
  PrimeAnalysis pa;
  int p;
  ContractibilityOptions opts;
  std::map<CollectionKind, GPoset> posets;
  std::map<Condition, ConditionReport> conditions;
  std::vector<SubgroupId> class_reps;
  SubgroupId sylow;
  std::optional<SubgroupId> second_sylow;
  bool d8;

  Context(std::shared_ptr<const SubgroupLattice> l, int prime, const ContractibilityOptions& o)
      : lattice_ptr(l), L(*l), pa(l, prime), p(prime), opts(o) {
    for (CollectionKind k : all_collection_kinds())
      posets.emplace(k, GPoset::of_subgroups(l, pa.build_collection(k).members));
    for (Condition c : {Condition::M, Condition::Cl, Condition::Ch})
      conditions.emplace(c, pa.check_condition(c));
    for (const auto& cls : L.conjugacy_classes()) class_reps.push_back(cls.front());
    std::sort(class_reps.begin(), class_reps.end());
    sylow = pa.sylows().front();
    if (pa.sylows().size() > 1) second_sylow = pa.sylows()[1];
    d8 = looks_like_d8(L) && p == 2;
  }

  const GPoset& C(CollectionKind k) const { return posets.at(k); }
  bool holds(Condition c) const { return conditions.at(c).holds; }
  std::string name(SubgroupId h) const { return describe_subgroup(L, h); }
};

ExplicitCertificate conical_cert(const GPoset& local, SubgroupId apex, Direction dir,
                                 const SubgroupFn& f, const std::string& desc) {
  const auto a = local.index_of(apex);
  if (!a) throw MapNotWellDefined("apex is not a member of the local poset");
  ConicalCertificate c{tabulate(local, f), *a, dir, desc};
  return {c, std::nullopt, desc};
}

ExplicitCertificate zigzag_cert(const GPoset& local,
                                const std::vector<std::pair<SubgroupFn, Comparison>>& chain,
                                const std::string& desc) {
  Zigzag z;
  z.description = desc;
  for (const auto& [f, cmp] : chain) {
    z.maps.push_back(tabulate(local, f));
    z.comparisons.push_back(cmp);
  }
  return {std::nullopt, z, desc};
}

// Q >= N_Q(P) <= N_Q(P)X >= X
ExplicitCertificate normalizer_zigzag(const Context& c, SubgroupId P, const GPoset& local,
                                      SubgroupId x, const std::string& desc) {
  const SubgroupId np = c.pa.normalizer(P);
  const SubgroupLattice& L = c.L;
  return zigzag_cert(local,
                     {{[&](SubgroupId q) { return L.meet(q, np); }, Comparison::Ge},
                      {[&](SubgroupId q) { return L.join(L.meet(q, np), x); }, Comparison::Le},
                      {[&](SubgroupId) { return x; }, Comparison::Ge}},
                     desc);
}

StepCheck new_step(std::string id, std::string claim) {
  StepCheck s;
  s.id = std::move(id);
  s.claim = std::move(claim);
  return s;
}

void add_failure(StepCheck& s, std::string msg) {
  if (s.failures.size() < kMaxFailures) s.failures.push_back(std::move(msg));
}

void merge_inclusion(StepCheck& s, const Context& c, const InclusionReport& r,
                     const std::string& prefix = {}) {
  for (const auto& chk : r.checks) {
    ++s.elements_checked;
    if (chk.explicit_certified) {
      ++s.explicit_certified;
    } else {
      add_failure(s, prefix + "P = " + c.name(chk.element) + ": " + chk.evidence);
    }
  }
  if (r.status == CheckStatus::Fail) s.status = CheckStatus::Fail;
  if (r.status == CheckStatus::Inconclusive && s.status == CheckStatus::Pass)
    s.status = CheckStatus::Inconclusive;
}

StepCheck inclusion_step(const Context& c, std::string id, std::string claim, const GPoset& sub,
                         const GPoset& ambient, InclusionMode mode,
                         const CertificateProvider& provider, bool equivariant = true) {
  StepCheck s = new_step(std::move(id), std::move(claim));
  merge_inclusion(s, c, verify_inclusion_equivalence(sub, ambient, mode, provider, c.opts, equivariant));
  return s;
}

void fail_step(StepCheck& s, std::string msg) {
  s.status = CheckStatus::Fail;
  add_failure(s, std::move(msg));
}

// ---- certificate providers -------------------------------------------------

CertificateProvider cone_on_tilde(const Context& c) {
  return [&c](SubgroupId P, const GPoset& local) -> std::optional<ExplicitCertificate> {
    const SubgroupId t = c.pa.tilde_of(P);
    return conical_cert(local, t, Direction::Up, [t](SubgroupId) { return t; },
                        "cone on the tilde subgroup");
  };
}

CertificateProvider product_with(const Context& c, bool hat, std::string desc) {
  return [&c, hat, desc](SubgroupId P, const GPoset& local) -> std::optional<ExplicitCertificate> {
    const SubgroupId t = hat ? c.pa.hat_of(P) : c.pa.tilde_of(P);
    return conical_cert(local, t, Direction::Up,
                        [&c, t](SubgroupId q) { return c.L.join(q, t); }, desc);
  };
}

CertificateProvider tilde_descent(const Context& c) {
  return [&c](SubgroupId P, const GPoset& local) -> std::optional<ExplicitCertificate> {
    return conical_cert(local, c.pa.tilde_of(P), Direction::Down,
                        [&c](SubgroupId q) { return c.pa.tilde_of(q); }, "Q >= tilde(Q) <= tilde(P)");
  };
}

CertificateProvider core_zigzag(const Context& c) {
  return [&c](SubgroupId P, const GPoset& local) -> std::optional<ExplicitCertificate> {
    return normalizer_zigzag(c, P, local, c.pa.normalizer_core(P),
                             "Q >= N_Q(P) <= N_Q(P)O_p(N_G(P)) >= O_p(N_G(P))");
  };
}

// Tries every p-local M >= N_G(P) containing a Sylow p-subgroup.
CertificateProvider local_zigzag(const Context& c) {
  return [&c](SubgroupId P, const GPoset& local) -> std::optional<ExplicitCertificate> {
    const SubgroupId np = c.pa.normalizer(P);
    const SubgroupId o = c.pa.normalizer_core(P);
    const std::size_t sylow_order = p_part(c.L.group().order(), c.p);
    std::optional<ExplicitCertificate> first;
    for (SubgroupId m : c.pa.p_locals()) {
      if (!c.L.leq(np, m) || p_part(c.L.at(m).order, c.p) != sylow_order) continue;
      const SubgroupId r = p_core(c.L, m, c.p);
      const SubgroupId x = c.L.join(c.L.meet(r, np), o);
      std::optional<ExplicitCertificate> cert;
      try {
        cert = normalizer_zigzag(c, P, local, x,
                                 "Q >= N_Q(P) <= N_Q(P)N_R(P)O_p(N_G(P)) >= N_R(P)O_p(N_G(P)), M = " +
                                     c.name(m));
      } catch (const MapNotWellDefined&) {
        continue;
      }
      if (check_explicit(local, *cert, np)) return cert;
      if (!first) first = cert;
    }
    return first;
  };
}

CertificateProvider provider_for(const Context& c, Condition h) {
  return h == Condition::M ? local_zigzag(c) : core_zigzag(c);
}

// ---- closure properties ----------------------------------------------------

StepCheck normal_overgroup_closure(const Context& c) {
  StepCheck s = new_step("normal-overgroup-closure", "P in tilde-S and P normal in a p-subgroup Q imply Q in tilde-S");
  const GPoset& ts = c.C(CollectionKind::TildeS);
  for (SubgroupId P : ts.subgroups())
    for (SubgroupId Q : c.C(CollectionKind::S).subgroups()) {
      if (!c.L.leq(P, Q) || !is_normal_in(c.L, P, Q)) continue;
      ++s.elements_checked;
      if (ts.contains(Q)) {
        ++s.explicit_certified;
      } else {
        fail_step(s, "P = " + c.name(P) + ", Q = " + c.name(Q));
      }
    }
  return s;
}

StepCheck relative_normalizer_closure(const Context& c) {
  StepCheck s = new_step("relative-normalizer-closure", "P a p-subgroup below Q in hat-S implies N_Q(P) in hat-S");
  const GPoset& hs = c.C(CollectionKind::HatS);
  for (SubgroupId P : c.C(CollectionKind::S).subgroups())
    for (SubgroupId Q : hs.subgroups()) {
      if (!c.L.less(P, Q)) continue;
      ++s.elements_checked;
      const SubgroupId nq = c.L.meet(Q, c.pa.normalizer(P));
      if (hs.contains(nq)) {
        ++s.explicit_certified;
      } else {
        fail_step(s, "P = " + c.name(P) + ", Q = " + c.name(Q));
      }
    }
  return s;
}

// ---- homology --------------------------------------------------------------

HomologyProfile nerve_homology(const Context& c, const GPoset& p) {
  return homology(OrderComplex::of(p, c.opts.max_simplices));
}

// ---- edges -----------------------------------------------------------------

// Skeleton of the edge the current worker is on, so a size cap hit anywhere
// inside the task still reports against the right edge.
thread_local EdgeResult current_edge;

EdgeResult make_edge(std::string table, bool vertical, std::string line, std::string from,
                     std::string to, LineStyle style, std::vector<Condition> hyps = {}) {
  EdgeResult e;
  e.table = std::move(table);
  e.vertical = vertical;
  e.line = std::move(line);
  e.from = std::move(from);
  e.to = std::move(to);
  e.style = style;
  e.hypotheses = std::move(hyps);
  current_edge = e;
  return e;
}

// Solid horizontal: steps decide, homology as fallback.
void settle_solid(const Context& c, EdgeResult& e, const GPoset& a, const GPoset& b) {
  bool fail = false, inconclusive = false;
  std::size_t checked = 0, expl = 0;
  for (const auto& s : e.steps) {
    fail |= s.status == CheckStatus::Fail;
    inconclusive |= s.status == CheckStatus::Inconclusive;
    checked += s.elements_checked;
    expl += s.explicit_certified;
  }
  const HomologyProfile ha = nerve_homology(c, a), hb = nerve_homology(c, b);
  const bool agree = ha.same_homology(hb);
  std::ostringstream ev;
  if (fail) {
    e.status = EdgeStatus::Mismatch;
    ev << "a proof step failed";
  } else if (inconclusive) {
    e.status = agree ? EdgeStatus::Inconclusive : EdgeStatus::Mismatch;
    ev << "some local posets undecided; nerve homology " << (agree ? "agrees" : "differs");
  } else if (!agree) {
    e.status = EdgeStatus::Mismatch;
    ev << "steps passed but nerve homology differs";
  } else {
    e.status = EdgeStatus::Certified;
    ev << expl << "/" << checked << " local checks settled by the explicit maps";
  }
  e.evidence = ev.str();
}

EdgeStatus scan_status(const std::vector<ScanEntry>& scan) {
  bool all_cert = true;
  for (const auto& s : scan) {
    if (s.status == ScanStatus::Mismatch) return EdgeStatus::Mismatch;
    all_cert &= s.status == ScanStatus::Certified;
  }
  return all_cert ? EdgeStatus::Certified : EdgeStatus::HomologyConsistent;
}

std::map<ScanStatus, std::size_t> status_counts(const std::vector<ScanEntry>& scan) {
  std::map<ScanStatus, std::size_t> m;
  for (const auto& s : scan) ++m[s.status];
  return m;
}

using AvatarFn = std::function<AvatarPair(SubgroupId)>;

void run_dashed(const Context& c, EdgeResult& e, const AvatarFn& avatars) {
  e.scan = fixed_point_equivalence_scan(c.L.subgroups_of(c.sylow), avatars, c.opts);
  e.status = scan_status(e.scan);
  std::size_t cert = 0;
  for (const auto& s : e.scan) cert += s.status == ScanStatus::Certified;
  e.evidence = std::to_string(cert) + "/" + std::to_string(e.scan.size()) +
               " subgroups of the Sylow subgroup " + c.name(c.sylow) + " certified";
  if (c.second_sylow) {
    const auto other = fixed_point_equivalence_scan(c.L.subgroups_of(*c.second_sylow), avatars, c.opts);
    const bool same = status_counts(other) == status_counts(e.scan);
    e.sylow_spot_check = std::string(same ? "same" : "different") +
                         " status counts over the subgroups of " + c.name(*c.second_sylow);
    if (!same) e.status = EdgeStatus::Mismatch;
  }
  for (auto& s : e.steps)
    if (s.status == CheckStatus::Fail) e.status = EdgeStatus::Mismatch;
}

void skip_unless(const Context& c, EdgeResult& e) {
  e.status = EdgeStatus::Skipped;
  e.evidence = "no listed hypothesis holds";
  for (Condition h : e.hypotheses) e.failing_conditions.push_back(c.conditions.at(h));
}

bool any_holds(const Context& c, const std::vector<Condition>& hs) {
  return std::any_of(hs.begin(), hs.end(), [&](Condition h) { return c.holds(h); });
}

// Dotted horizontal: ordinary homology at H = 1.
void run_dotted_horizontal(const Context& c, EdgeResult& e, const GPoset& a, const GPoset& b) {
  if (a == b) {
    // Identity map: an equivariant equivalence on every fixed-point set.
    e.status = EdgeStatus::Certified;
    e.evidence = "the two collections coincide";
    return;
  }
  const HomologyProfile ha = nerve_homology(c, a), hb = nerve_homology(c, b);
  if (ha.same_homology(hb)) {
    e.status = EdgeStatus::HomologyConsistent;
    e.evidence = "reduced homology of the nerves agrees";
  } else {
    e.status = EdgeStatus::Mismatch;
    e.evidence = "reduced homology of the nerves differs";
  }
}

void run_dotted_vertical(EdgeResult& e) {
  e.status = EdgeStatus::Certified;
  e.evidence = "the two avatars coincide at H = 1";
}

void attach_counterexamples(EdgeResult& e, std::vector<CounterexampleCheck> found) {
  for (auto& f : found) {
    if (!f.reproduced) {
      e.status = EdgeStatus::Mismatch;
      e.evidence += "; documented counterexample not reproduced: " + f.name;
    }
    e.counterexamples.push_back(std::move(f));
  }
}

// ---- D8 data ---------------------------------------------------------------

std::vector<SubgroupId> klein_four_subgroups(const SubgroupLattice& L) {
  std::vector<SubgroupId> out;
  for (const auto& s : L.subgroups())
    if (s.order == 4 && is_elementary_abelian(L, s.index, 2)) out.push_back(s.index);
  return out;
}

std::optional<SubgroupId> cyclic_four(const SubgroupLattice& L) {
  for (const auto& s : L.subgroups())
    if (s.order == 4 && !is_elementary_abelian(L, s.index, 2)) return s.index;
  return std::nullopt;
}

bool is_single_edge(const GPoset& p) { return p.size() == 2 && (p.leq(0, 1) || p.leq(1, 0)); }

bool has_edge(const GPoset& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.less(i, j)) return true;
  return false;
}

bool contractible(const Context& c, const GPoset& p) { return contractibility_verdict(p, c.opts).contractible(); }

std::string shape(const Context& c, const GPoset& p) {
  if (p.empty()) return "empty";
  std::string out = std::to_string(p.size()) + " element(s)";
  if (has_edge(p)) out += ", has an edge";
  out += contractible(c, p) ? ", contractible" : ", not shown contractible";
  return out;
}

CounterexampleCheck empty_vs(const Context& c, std::string name, const GPoset& empty_side,
                             const GPoset& other, std::string other_expect,
                             const std::function<bool(const GPoset&)>& ok) {
  CounterexampleCheck x;
  x.name = std::move(name);
  x.expected = "first side empty; second side " + other_expect;
  x.observed = "first side " + shape(c, empty_side) + "; second side " + shape(c, other);
  x.reproduced = empty_side.empty() && ok(other);
  return x;
}

std::vector<CounterexampleCheck> above_klein(const Context& c, CollectionKind lo, CollectionKind hi) {
  std::vector<CounterexampleCheck> out;
  for (SubgroupId v : klein_four_subgroups(c.L))
    out.push_back(empty_vs(c,
                           std::string(to_string(lo)) + "_{>=H} vs " + std::string(to_string(hi)) +
                               "_{>=H}, H = " + c.name(v),
                           interval_above(c.C(lo), v), interval_above(c.C(hi), v), "a single point",
                           [](const GPoset& g) { return g.size() == 1; }));
  return out;
}

std::vector<CounterexampleCheck> above_z4(const Context& c, CollectionKind lo, CollectionKind hi) {
  const auto z = cyclic_four(c.L);
  if (!z) return {};
  return {empty_vs(c,
                   std::string(to_string(lo)) + "_{>=K} vs " + std::string(to_string(hi)) +
                       "_{>=K}, K = " + c.name(*z),
                   interval_above(c.C(lo), *z), interval_above(c.C(hi), *z),
                   "contains an edge and is contractible",
                   [&c](const GPoset& g) { return has_edge(g) && contractible(c, g); })};
}

std::vector<CounterexampleCheck> centralized_klein(const Context& c, CollectionKind lo, CollectionKind hi) {
  std::vector<CounterexampleCheck> out;
  for (SubgroupId v : klein_four_subgroups(c.L)) {
    const SubgroupId cg = c.pa.centralizer(v);
    auto x = empty_vs(c,
                      std::string(to_string(hi)) + "_{<=C_G(H)} vs " + std::string(to_string(lo)) +
                          "_{<=C_G(H)}, H = " + c.name(v),
                      interval_below(c.C(hi), cg), interval_below(c.C(lo), cg), "a single edge",
                      is_single_edge);
    x.expected += "; C_G(H) = H";
    x.observed += cg == v ? "; C_G(H) = H" : "; C_G(H) = " + c.name(cg);
    x.reproduced = x.reproduced && cg == v;
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<CounterexampleCheck> z4_vertical(const Context& c, CollectionKind k, bool top) {
  const auto z = cyclic_four(c.L);
  if (!z) return {};
  const GPoset& C = c.C(k);
  const GPoset avatar = top ? interval_above(C, *z) : interval_below(C, c.pa.centralizer(*z));
  return {empty_vs(c,
                   std::string(to_string(k)) + (top ? "_{>=H}" : "_{<=C_G(H)}") + " vs " +
                       std::string(to_string(k)) + "^H, H = " + c.name(*z),
                   avatar, fixed_point_subposet(C, *z), "contractible",
                   [&c](const GPoset& g) { return contractible(c, g); })};
}

// ---- tables ----------------------------------------------------------------

using K = CollectionKind;
using Task = std::function<EdgeResult()>;

std::string kname(K k) { return std::string(to_string(k)); }

void vertical_scan(const Context& c, EdgeResult& e, K k, bool top) {
  const GPoset& C = c.C(k);
  run_dashed(c, e, [&C, top](SubgroupId h) { return top ? above_in_fixed(C, h) : centralized_in_fixed(C, h); });
}

std::vector<Task> table31_tasks(const Context& c) {
  std::vector<Task> t;
  const std::string T = "table31";
  const GPoset& E = c.C(K::E);
  const GPoset& TA = c.C(K::TildeA);
  const GPoset& TS = c.C(K::TildeS);
  const GPoset& TB = c.C(K::TildeB);

  t.push_back([&, T] {
    auto e = make_edge(T, false, "nerve", "E", "tilde-A", LineStyle::Solid);
    auto s = inclusion_step(c, "lower-fibers-cone", "E_{<=P} is a cone on tilde(P) for P in tilde-A",
                            E, TA, InclusionMode::LowerFibers, cone_on_tilde(c));
    for (SubgroupId P : TA.subgroups()) {
      ++s.elements_checked;
      const SubgroupId t = c.pa.tilde_of(P);
      if (interval_below(E, P) == interval_below(c.C(K::A), t)) {
        ++s.explicit_certified;
      } else {
        fail_step(s, "E_{<=P} differs from the elementary abelian subgroups of tilde(P), P = " + c.name(P));
      }
    }
    e.steps.push_back(std::move(s));
    settle_solid(c, e, E, TA);
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, false, "nerve", "tilde-A", "tilde-S", LineStyle::Solid);
    e.steps.push_back(inclusion_step(c, "lower-fibers-product", "Q <= Q tilde(P) >= tilde(P) on tilde-A_{<=P}",
                                     TA, TS, InclusionMode::LowerFibers,
                                     product_with(c, false, "Q <= Q tilde(P) >= tilde(P)")));
    settle_solid(c, e, TA, TS);
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, false, "nerve", "tilde-S", "tilde-B", LineStyle::Solid);
    e.steps.push_back(normal_overgroup_closure(c));
    e.steps.push_back(inclusion_step(c, "upper-links-zigzag-equivariant",
                                     "tilde-S_{>P} is N_G(P)-contractible for P not radical", TB, TS,
                                     InclusionMode::UpperLinksEquivariant, core_zigzag(c)));
    settle_solid(c, e, TB, TS);
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, false, "EO", "E", "tilde-A", LineStyle::Dotted);
    run_dotted_horizontal(c, e, E, TA);
    if (c.d8) attach_counterexamples(e, above_klein(c, K::E, K::TildeA));
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, false, "EO", "tilde-A", "tilde-S", LineStyle::Dotted);
    run_dotted_horizontal(c, e, TA, TS);
    if (c.d8) attach_counterexamples(e, above_z4(c, K::TildeA, K::TildeS));
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, false, "EO", "tilde-S", "tilde-B", LineStyle::Solid);
    e.steps.push_back(normal_overgroup_closure(c));
    e.steps.push_back(inclusion_step(c, "upper-links-zigzag", "tilde-S_{>P} is contractible for P not radical",
                                     TB, TS, InclusionMode::UpperLinks, core_zigzag(c)));
    settle_solid(c, e, TB, TS);
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, false, "EA", "E", "tilde-A", LineStyle::Solid);
    e.steps.push_back(inclusion_step(c, "lower-links-conical", "tilde-A_{<P} contracts via Q >= tilde(Q) <= tilde(P)",
                                     E, TA, InclusionMode::LowerLinks, tilde_descent(c)));
    settle_solid(c, e, E, TA);
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, false, "EA", "tilde-A", "tilde-S", LineStyle::Solid);
    StepCheck s = new_step("centralizer-fibers-product",
                "for every H, tilde-A_{<=C_G(H)} has lower fibers Q <= Q tilde(P) >= tilde(P)");
    for (SubgroupId h : c.class_reps) {
      const SubgroupId cg = c.pa.centralizer(h);
      merge_inclusion(s, c,
                      verify_inclusion_equivalence(interval_below(TA, cg), interval_below(TS, cg),
                                                   InclusionMode::LowerFibers,
                                                   product_with(c, false, "Q <= Q tilde(P) >= tilde(P)"),
                                                   c.opts, false),
                      "H = " + c.name(h) + ", ");
    }
    e.steps.push_back(std::move(s));
    settle_solid(c, e, TA, TS);
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, false, "EA", "tilde-S", "tilde-B", LineStyle::Dotted);
    run_dotted_horizontal(c, e, TS, TB);
    if (c.d8) attach_counterexamples(e, centralized_klein(c, K::TildeS, K::TildeB));
    return e;
  });

  // verticals
  for (K k : {K::E, K::TildeA}) {
    t.push_back([&, T, k] {
      auto e = make_edge(T, true, kname(k), "EO", "nerve", LineStyle::Dotted);
      run_dotted_vertical(e);
      return e;
    });
    t.push_back([&, T, k] {
      auto e = make_edge(T, true, kname(k), "nerve", "EA", LineStyle::Dashed);
      vertical_scan(c, e, k, false);
      return e;
    });
  }
  t.push_back([&, T] {
    auto e = make_edge(T, true, "tilde-S", "EO", "nerve", LineStyle::Dashed);
    StepCheck s = new_step("retraction-onto-overgroups", "Q -> QH maps tilde-S^H into tilde-S_{>=H} for every H <= S");
    for (SubgroupId h : c.L.subgroups_of(c.sylow)) {
      ++s.elements_checked;
      const GPoset fixed = fixed_point_subposet(TS, h);
      const GPoset above = interval_above(TS, h);
      try {
        const PosetMap f = tabulate(fixed, [&](SubgroupId q) { return c.L.join(q, h); });
        const auto r = verify_monotone_retraction(fixed, f, above, Direction::Up);
        if (r) {
          ++s.explicit_certified;
        } else {
          fail_step(s, "H = " + c.name(h) + ": " + r.reason);
        }
      } catch (const Error& err) {
        fail_step(s, "H = " + c.name(h) + ": " + err.what());
      }
    }
    e.steps.push_back(std::move(s));
    vertical_scan(c, e, K::TildeS, true);
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, true, "tilde-S", "nerve", "EA", LineStyle::Dashed);
    vertical_scan(c, e, K::TildeS, false);
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, true, "tilde-B", "EO", "nerve", LineStyle::Dashed);
    vertical_scan(c, e, K::TildeB, true);
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, true, "tilde-B", "nerve", "EA", LineStyle::Dotted);
    run_dotted_vertical(e);
    return e;
  });
  return t;
}

const std::vector<Condition> kAll3 = {Condition::Cl, Condition::Ch, Condition::M};
const std::vector<Condition> kClCh = {Condition::Cl, Condition::Ch};

// Ŝ_{>P} contractions under each hypothesis that holds.
void hypothesis_steps(const Context& c, EdgeResult& e, bool equivariant) {
  const GPoset& HS = c.C(K::HatS);
  const GPoset& HB = c.C(K::HatB);
  const InclusionMode mode = equivariant ? InclusionMode::UpperLinksEquivariant : InclusionMode::UpperLinks;
  for (Condition h : e.hypotheses) {
    if (!c.holds(h)) continue;
    const std::string tag(to_string(h));
    auto s = inclusion_step(c, std::string(equivariant ? "upper-links-zigzag-equivariant" : "upper-links-zigzag") +
                                   " (" + tag + ")",
                            "hat-S_{>P} contracts for P in hat-S not in hat-B", HB, HS, mode,
                            provider_for(c, h));
    s.hypothesis = h;
    if (h == Condition::Cl && !(HS == c.C(K::TildeS))) fail_step(s, "hat-S differs from tilde-S");
    e.steps.push_back(std::move(s));
  }
}

std::vector<Task> table44_tasks(const Context& c) {
  std::vector<Task> t;
  const std::string T = "table44";
  const GPoset& HA = c.C(K::HatA);
  const GPoset& HS = c.C(K::HatS);
  const GPoset& HB = c.C(K::HatB);

  t.push_back([&, T] {
    auto e = make_edge(T, false, "nerve", "hat-A", "hat-S", LineStyle::Solid);
    e.steps.push_back(inclusion_step(c, "lower-fibers-product", "Q <= Q hat(P) >= hat(P) on hat-A_{<=P}", HA,
                                     HS, InclusionMode::LowerFibers,
                                     product_with(c, true, "Q <= Q hat(P) >= hat(P)")));
    settle_solid(c, e, HA, HS);
    return e;
  });
  auto labeled = [&c, T](bool eo) -> Task {
    return [&c, T, eo] {
      auto e = make_edge(T, false, eo ? "EO" : "nerve", "hat-S", "hat-B", LineStyle::Solid, kAll3);
      if (!any_holds(c, e.hypotheses)) {
        skip_unless(c, e);
        return e;
      }
      e.steps.push_back(relative_normalizer_closure(c));
      hypothesis_steps(c, e, !eo);
      settle_solid(c, e, c.C(K::HatB), c.C(K::HatS));
      return e;
    };
  };
  t.push_back(labeled(false));
  t.push_back([&, T] {
    auto e = make_edge(T, false, "EO", "hat-A", "hat-S", LineStyle::Dotted);
    run_dotted_horizontal(c, e, HA, HS);
    if (c.d8) attach_counterexamples(e, above_z4(c, K::HatA, K::HatS));
    return e;
  });
  t.push_back(labeled(true));
  t.push_back([&, T] {
    auto e = make_edge(T, false, "EA", "hat-A", "hat-S", LineStyle::Solid);
    StepCheck s = new_step("centralizer-fibers-product", "for every H, hat-A_{<=C_G(H)} has lower fibers Q <= Q hat(P) >= hat(P)");
    for (SubgroupId h : c.class_reps) {
      const SubgroupId cg = c.pa.centralizer(h);
      merge_inclusion(s, c,
                      verify_inclusion_equivalence(interval_below(HA, cg), interval_below(HS, cg),
                                                   InclusionMode::LowerFibers,
                                                   product_with(c, true, "Q <= Q hat(P) >= hat(P)"), c.opts,
                                                   false),
                      "H = " + c.name(h) + ", ");
    }
    e.steps.push_back(std::move(s));
    settle_solid(c, e, HA, HS);
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, false, "EA", "hat-S", "hat-B", LineStyle::Dotted);
    run_dotted_horizontal(c, e, HS, HB);
    if (c.d8) attach_counterexamples(e, centralized_klein(c, K::HatS, K::HatB));
    return e;
  });

  // verticals
  t.push_back([&, T] {
    auto e = make_edge(T, true, "hat-A", "EO", "nerve", LineStyle::Dotted);
    run_dotted_vertical(e);
    if (c.d8) attach_counterexamples(e, z4_vertical(c, K::HatA, true));
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, true, "hat-A", "nerve", "EA", LineStyle::Dashed, kClCh);
    if (!any_holds(c, e.hypotheses)) {
      skip_unless(c, e);
      return e;
    }
    vertical_scan(c, e, K::HatA, false);
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, true, "hat-S", "EO", "nerve", LineStyle::Dashed, kClCh);
    if (!any_holds(c, e.hypotheses)) {
      skip_unless(c, e);
      return e;
    }
    vertical_scan(c, e, K::HatS, true);
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, true, "hat-S", "nerve", "EA", LineStyle::Dashed, kClCh);
    if (!any_holds(c, e.hypotheses)) {
      skip_unless(c, e);
      return e;
    }
    if (c.holds(Condition::Ch)) {
      StepCheck s = new_step("centralizer-cone-on-core-center",
                  "Q <= Q Z(O_p(N_G(P))) >= Z(O_p(N_G(P))) on hat-S_{<=C_G(P)}, 1 < P <= S");
      s.hypothesis = Condition::Ch;
      for (SubgroupId P : c.L.subgroups_of(c.sylow)) {
        if (P == c.L.trivial()) continue;
        ++s.elements_checked;
        const SubgroupId z = c.pa.center(c.pa.normalizer_core(P));
        const GPoset local = interval_below(HS, c.pa.centralizer(P));
        try {
          const auto cert = conical_cert(local, z, Direction::Up,
                                         [&c, z](SubgroupId q) { return c.L.join(q, z); }, "");
          const auto r = check_explicit(local, cert, std::nullopt);
          if (r) {
            ++s.explicit_certified;
          } else {
            fail_step(s, "P = " + c.name(P) + ": " + r.reason);
          }
        } catch (const Error& err) {
          fail_step(s, "P = " + c.name(P) + ": " + err.what());
        }
      }
      e.steps.push_back(std::move(s));
    }
    vertical_scan(c, e, K::HatS, false);
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, true, "hat-B", "EO", "nerve", LineStyle::Dashed, kClCh);
    if (!any_holds(c, e.hypotheses)) {
      skip_unless(c, e);
      return e;
    }
    vertical_scan(c, e, K::HatB, true);
    return e;
  });
  t.push_back([&, T] {
    auto e = make_edge(T, true, "hat-B", "nerve", "EA", LineStyle::Dotted);
    run_dotted_vertical(e);
    if (c.d8) attach_counterexamples(e, z4_vertical(c, K::HatB, false));
    return e;
  });
  return t;
}

// Runs tasks on `jobs` threads; results keep task order.
std::vector<EdgeResult> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<EdgeResult> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (const SizeCap& cap) {
        out[i] = current_edge;
        out[i].status = EdgeStatus::Inconclusive;
        out[i].evidence = std::string("simplex bound reached: ") + cap.what();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

// ---- suites ----------------------------------------------------------------

HomologyCheck homology_check(const Context& c, std::string name, std::vector<K> kinds, bool required) {
  HomologyCheck h;
  h.name = std::move(name);
  h.kinds = std::move(kinds);
  h.required = required;
  try {
    for (K k : h.kinds) h.profiles.push_back(nerve_homology(c, c.C(k)));
  } catch (const SizeCap&) {
    h.complete = false;
    h.profiles.clear();
    return h;
  }
  for (const auto& p : h.profiles) h.agree = h.agree && p.same_homology(h.profiles.front());
  return h;
}

InclusionCheck subset_check(const Context& c, K a, K b) {
  InclusionCheck i;
  i.name = kname(a) + " in " + kname(b);
  for (SubgroupId h : c.C(a).subgroups())
    if (!c.C(b).contains(h)) {
      i.holds = false;
      i.violations.push_back(h);
    }
  return i;
}

InclusionCheck equality_check(const Context& c, std::string name, std::vector<K> kinds, bool applicable) {
  InclusionCheck i;
  i.name = std::move(name);
  i.equality = true;
  i.applicable = applicable;
  std::vector<SubgroupId> diff;
  const auto& base = c.C(kinds.front()).subgroups();
  for (std::size_t j = 1; j < kinds.size(); ++j) {
    const auto& other = c.C(kinds[j]).subgroups();
    std::set_symmetric_difference(base.begin(), base.end(), other.begin(), other.end(),
                                  std::back_inserter(diff));
  }
  std::sort(diff.begin(), diff.end());
  diff.erase(std::unique(diff.begin(), diff.end()), diff.end());
  i.holds = diff.empty();
  i.violations = std::move(diff);
  return i;
}

void inclusions_suite(const Context& c, Report& r) {
  for (auto [a, b] : std::vector<std::pair<K, K>>{{K::D, K::Bcen},
                                                  {K::Bcen, K::HatB},
                                                  {K::HatB, K::B},
                                                  {K::Ce, K::HatS},
                                                  {K::HatA, K::TildeA},
                                                  {K::TildeA, K::A},
                                                  {K::HatS, K::TildeS},
                                                  {K::TildeS, K::S},
                                                  {K::HatB, K::TildeB},
                                                  {K::TildeB, K::B},
                                                  {K::E, K::TildeA}})
    r.inclusions.push_back(subset_check(c, a, b));
  r.inclusions.push_back(
      equality_check(c, "B = hat-B = Bcen under Ch", {K::B, K::HatB, K::Bcen}, c.holds(Condition::Ch)));
  const bool one_class = c.pa.one_class_of_order_p();
  for (auto [h, b] : std::vector<std::pair<K, K>>{{K::HatA, K::A}, {K::HatS, K::S}, {K::HatB, K::B}})
    r.inclusions.push_back(
        equality_check(c, kname(h) + " = " + kname(b) + " with one class of order-p elements", {h, b}, one_class));
  for (auto [h, t] : std::vector<std::pair<K, K>>{{K::HatA, K::TildeA}, {K::HatS, K::TildeS}, {K::HatB, K::TildeB}})
    r.inclusions.push_back(
        equality_check(c, kname(h) + " = " + kname(t) + " under Cl", {h, t}, c.holds(Condition::Cl)));
}

void counterexamples_suite(const Context& c, Report& r) {
  if (!c.d8) {
    r.annotations.push_back("documented counterexamples concern the dihedral group of order 8 at p = 2; none checked");
    return;
  }
  auto add = [&r](std::vector<CounterexampleCheck> v) {
    for (auto& x : v) r.counterexamples.push_back(std::move(x));
  };
  {
    CounterexampleCheck x{"E has a single member", "1 member", std::to_string(c.C(K::E).size()) + " member(s)",
                          c.C(K::E).size() == 1};
    r.counterexamples.push_back(x);
    const auto oc = OrderComplex::of(c.C(K::TildeA), c.opts.max_simplices);
    CounterexampleCheck y{"tilde-A nerve is two edges sharing a vertex", "3 vertices, 2 edges, no triangles",
                          std::to_string(oc.count(0)) + " vertices, " + std::to_string(oc.count(1)) + " edges, " +
                              std::to_string(oc.count(2)) + " triangles",
                          oc.count(0) == 3 && oc.count(1) == 2 && oc.count(2) == 0};
    if (y.reproduced) {
      // the shared vertex lies on both edges
      const auto& e = oc.simplices(1);
      y.reproduced = e[0][0] == e[1][0] || e[0][0] == e[1][1] || e[0][1] == e[1][0] || e[0][1] == e[1][1];
    }
    r.counterexamples.push_back(y);
  }
  add(above_klein(c, K::E, K::TildeA));
  add(centralized_klein(c, K::TildeS, K::TildeB));
  add(above_z4(c, K::TildeA, K::TildeS));
  for (Condition h : {Condition::M, Condition::Cl, Condition::Ch})
    r.counterexamples.push_back({"condition " + std::string(to_string(h)) + " holds", "holds",
                                 c.holds(h) ? "holds" : "fails", c.holds(h)});
  add(z4_vertical(c, K::HatA, true));
  add(z4_vertical(c, K::HatB, false));
}

bool edge_certified(const std::vector<EdgeResult>& edges, const std::string& table, const std::string& line,
                    const std::string& to) {
  for (const auto& e : edges)
    if (!e.vertical && e.table == table && e.line == line && e.to == to) return e.status == EdgeStatus::Certified;
  return false;
}

}  // namespace

Report run_suite(std::shared_ptr<const SubgroupLattice> lattice, int p, Suite suite,
                 const ContractibilityOptions& opts, unsigned jobs) {
  const Context c(lattice, p, opts);
  Report r;
  r.lattice = lattice;
  const PermutationGroup& G = lattice->group();
  r.group.name = G.name();
  r.group.order = G.order();
  r.group.degree = G.degree();
  for (const auto& g : G.generators()) r.group.generators.push_back(g.to_cycle_string());
  r.group.subgroup_count = lattice->size();
  {
    std::ostringstream h;
    h << std::hex << G.content_hash();
    r.group.content_hash = h.str();
  }
  r.prime = p;
  r.suite = suite;
  for (K k : all_collection_kinds()) r.collections.push_back(c.pa.build_collection(k));
  for (const auto& [_, rep] : c.conditions) r.conditions.push_back(rep);

  const bool all = suite == Suite::All;
  std::vector<Task> tasks;
  if (all || suite == Suite::Table31)
    for (auto& t : table31_tasks(c)) tasks.push_back(std::move(t));
  if (all || suite == Suite::Table44)
    for (auto& t : table44_tasks(c)) tasks.push_back(std::move(t));
  r.edges = run_tasks(tasks, jobs);

  if (all || suite == Suite::Table31) {
    r.homology.push_back(homology_check(c, "A, S, B", {K::A, K::S, K::B}, true));
    r.homology.push_back(homology_check(c, "E, tilde-A, tilde-S, tilde-B", {K::E, K::TildeA, K::TildeS, K::TildeB}, true));
  }
  if (all || suite == Suite::Table44) {
    r.homology.push_back(homology_check(c, "hat-A, hat-S", {K::HatA, K::HatS}, true));
    r.homology.push_back(homology_check(c, "hat-S, hat-B", {K::HatS, K::HatB},
                                        edge_certified(r.edges, "table44", "nerve", "hat-B")));
  }
  if (all || suite == Suite::Inclusions) inclusions_suite(c, r);
  if (all || suite == Suite::Counterexamples) counterexamples_suite(c, r);
  r.annotations.push_back(
      "not verified: Bredon homology, ampleness and sharpness, Bousfield-Kan spectral sequences, Borel "
      "constructions, mod-p cohomology conclusions, sporadic group classifications");
  return r;
}

Report run(const VerificationPlan& plan) {
  auto G = std::make_shared<const PermutationGroup>(load_group(plan.group_source, plan.limits));
  if (!is_prime(plan.prime) || G->order() % static_cast<std::size_t>(plan.prime) != 0)
    throw PrimeDoesNotDivide(plan.prime, G->order());
  auto L = std::make_shared<const SubgroupLattice>(load_or_enumerate(G, plan.cache_dir, plan.limits));
  ContractibilityOptions opts;
  opts.max_simplices = plan.max_simplices;
  return run_suite(L, plan.prime, plan.suite, opts, plan.jobs);
}

Report run_inclusions(const VerificationPlan& plan) {
  VerificationPlan p = plan;
  p.suite = Suite::Inclusions;
  return run(p);
}

// ---- output ----------------------------------------------------------------

namespace {

using ojson = nlohmann::ordered_json;

ojson subgroup_json(const SubgroupLattice& L, SubgroupId h) {
  return ojson{{"index", h.value}, {"order", L.at(h).order}, {"generators", describe_subgroup(L, h)}};
}

ojson ids_json(const SubgroupLattice& L, const std::vector<SubgroupId>& ids) {
  ojson a = ojson::array();
  for (SubgroupId h : ids) a.push_back(subgroup_json(L, h));
  return a;
}

ojson homology_json(const HomologyProfile& h) { return ojson::parse(to_json(h).dump()); }

ojson condition_json(const SubgroupLattice& L, const ConditionReport& c) {
  ojson w = ojson::array();
  for (const auto& x : c.witnesses) {
    ojson els = ojson::array();
    for (Element e : x.elements) els.push_back(L.group().element(e).to_cycle_string());
    w.push_back({{"description", x.description}, {"subgroups", ids_json(L, x.subgroups)}, {"elements", els}});
  }
  return {{"condition", to_string(c.condition)}, {"holds", c.holds}, {"witnesses", w}};
}

ojson step_json(const StepCheck& s) {
  ojson j{{"id", s.id},
          {"claim", s.claim},
          {"hypothesis", s.hypothesis ? ojson(to_string(*s.hypothesis)) : ojson(nullptr)},
          {"status", to_string(s.status)},
          {"elements_checked", s.elements_checked},
          {"explicit_certified", s.explicit_certified},
          {"failures", s.failures}};
  return j;
}

ojson counterexample_json(const CounterexampleCheck& c) {
  return {{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"reproduced", c.reproduced}};
}

ojson edge_json(const SubgroupLattice& L, const EdgeResult& e) {
  ojson hyps = ojson::array();
  for (Condition h : e.hypotheses) hyps.push_back(to_string(h));
  ojson steps = ojson::array();
  for (const auto& s : e.steps) steps.push_back(step_json(s));
  ojson scan = ojson::array();
  for (const auto& s : e.scan) {
    ojson j{{"h", subgroup_json(L, s.h)},
            {"sub_size", s.sub_size},
            {"ambient_size", s.ambient_size},
            {"status", to_string(s.status)},
            {"evidence", s.evidence}};
    if (s.sub_homology) j["sub_homology"] = homology_json(*s.sub_homology);
    if (s.ambient_homology) j["ambient_homology"] = homology_json(*s.ambient_homology);
    scan.push_back(std::move(j));
  }
  ojson cx = ojson::array();
  for (const auto& c : e.counterexamples) cx.push_back(counterexample_json(c));
  ojson conds = ojson::array();
  for (const auto& c : e.failing_conditions) conds.push_back(condition_json(L, c));
  return {{"name", e.name()},
          {"table", e.table},
          {"orientation", e.vertical ? "vertical" : "horizontal"},
          {e.vertical ? "column" : "row", e.line},
          {"from", e.from},
          {"to", e.to},
          {"style", to_string(e.style)},
          {"hypotheses", hyps},
          {"status", to_string(e.status)},
          {"evidence", e.evidence},
          {"steps", steps},
          {"scan", scan},
          {"sylow_spot_check", e.sylow_spot_check ? ojson(*e.sylow_spot_check) : ojson(nullptr)},
          {"counterexamples", cx},
          {"failing_conditions", conds}};
}

ojson report_json(const Report& r) {
  const SubgroupLattice& L = *r.lattice;
  ojson cols = ojson::array();
  for (const auto& c : r.collections) {
    ojson members = ojson::array(), gens = ojson::array();
    for (SubgroupId h : c.members) {
      members.push_back(h.value);
      gens.push_back(describe_subgroup(L, h));
    }
    cols.push_back({{"kind", to_string(c.kind)},
                    {"prime", c.prime},
                    {"size", c.size()},
                    {"members", members},
                    {"generators", gens}});
  }
  ojson conds = ojson::array();
  for (const auto& c : r.conditions) conds.push_back(condition_json(L, c));
  ojson edges = ojson::array();
  std::map<std::string, std::size_t> counts;
  for (const auto& e : r.edges) {
    edges.push_back(edge_json(L, e));
    ++counts[std::string(to_string(e.status))];
  }
  ojson cx = ojson::array();
  for (const auto& c : r.counterexamples) cx.push_back(counterexample_json(c));
  ojson inc = ojson::array();
  for (const auto& i : r.inclusions)
    inc.push_back({{"name", i.name},
                   {"kind", i.equality ? "equality" : "inclusion"},
                   {"applicable", i.applicable},
                   {"holds", i.holds},
                   {"violations", ids_json(L, i.violations)}});
  ojson hom = ojson::array();
  for (const auto& h : r.homology) {
    ojson profiles = ojson::array();
    for (std::size_t i = 0; i < h.profiles.size(); ++i)
      profiles.push_back({{"kind", to_string(h.kinds[i])}, {"homology", homology_json(h.profiles[i])}});
    hom.push_back({{"name", h.name}, {"required", h.required}, {"agree", h.agree}, {"complete", h.complete}, {"profiles", profiles}});
  }
  ojson status_counts = ojson::object();
  for (const auto& [k, v] : counts) status_counts[k] = v;
  return {{"schema_version", Report::kSchemaVersion},
          {"group",
           {{"name", r.group.name},
            {"order", r.group.order},
            {"degree", r.group.degree},
            {"generators", r.group.generators},
            {"subgroups", r.group.subgroup_count},
            {"content_hash", r.group.content_hash}}},
          {"prime", r.prime},
          {"suite", to_string(r.suite)},
          {"summary",
           {{"edges", status_counts},
            {"mismatch", r.has_mismatch()},
            {"inconclusive", r.has_inconclusive()},
            {"exit_code", exit_code(r, false)}}},
          {"collections", cols},
          {"conditions", conds},
          {"edges", edges},
          {"counterexamples", cx},
          {"inclusions", inc},
          {"homology", hom},
          {"annotations", r.annotations}};
}

std::string betti_text(const HomologyProfile& h) {
  if (h.empty) return "empty";
  std::string s = "[";
  for (std::size_t i = 0; i < h.reduced_betti.size(); ++i) s += (i ? "," : "") + std::to_string(h.reduced_betti[i]);
  s += "]";
  for (std::size_t d = 0; d < h.torsion.size(); ++d)
    for (const auto& t : h.torsion[d]) s += " Z/" + t.get_str() + " in H" + std::to_string(d);
  return s;
}

std::string markdown(const Report& r) {
  const SubgroupLattice& L = *r.lattice;
  std::ostringstream o;
  o << "# Verification report: " << r.group.name << ", p = " << r.prime << "\n\n";
  o << "Suite `" << to_string(r.suite) << "`, group order " << r.group.order << ", " << r.group.subgroup_count
    << " subgroups, schema version " << Report::kSchemaVersion << ".\n\n";
  o << "Result: " << (r.has_mismatch() ? "MISMATCH found" : "no mismatch")
    << (r.has_inconclusive() ? ", some edges inconclusive" : "") << ".\n\n";

  o << "## Collections\n\n| kind | size |\n|---|---|\n";
  for (const auto& c : r.collections) o << "| " << to_string(c.kind) << " | " << c.size() << " |\n";
  o << "\n## Conditions\n\n| condition | holds | first witness |\n|---|---|---|\n";
  for (const auto& c : r.conditions)
    o << "| " << to_string(c.condition) << " | " << (c.holds ? "yes" : "no") << " | "
      << (c.witnesses.empty() ? "" : c.witnesses.front().description) << " |\n";

  if (!r.edges.empty()) {
    o << "\n## Edges\n\n| table | edge | style | hypotheses | status | evidence |\n|---|---|---|---|---|---|\n";
    for (const auto& e : r.edges) {
      std::string hyps;
      for (Condition h : e.hypotheses) hyps += (hyps.empty() ? "" : ",") + std::string(to_string(h));
      std::string edge = e.vertical ? "column " + e.line + ": " + e.from + " -- " + e.to
                                    : "row " + e.line + ": " + e.from + " -- " + e.to;
      o << "| " << e.table << " | " << edge << " | " << to_string(e.style) << " | " << hyps << " | "
        << to_string(e.status) << " | " << e.evidence << " |\n";
    }
  }
  std::vector<std::pair<std::string, const CounterexampleCheck*>> cx;
  for (const auto& e : r.edges)
    for (const auto& c : e.counterexamples) cx.emplace_back(e.name(), &c);
  for (const auto& c : r.counterexamples) cx.emplace_back("counterexamples suite", &c);
  if (!cx.empty()) {
    o << "\n## Counterexamples\n\n| where | check | expected | observed | reproduced |\n|---|---|---|---|---|\n";
    for (const auto& [where, c] : cx)
      o << "| " << where << " | " << c->name << " | " << c->expected << " | " << c->observed << " | "
        << (c->reproduced ? "yes" : "no") << " |\n";
  }
  if (!r.inclusions.empty()) {
    o << "\n## Inclusions\n\n| check | applicable | holds | violations |\n|---|---|---|---|\n";
    for (const auto& i : r.inclusions) {
      std::string v;
      for (SubgroupId h : i.violations) v += (v.empty() ? "" : " ") + describe_subgroup(L, h);
      o << "| " << i.name << " | " << (i.applicable ? "yes" : "no") << " | " << (i.holds ? "yes" : "no") << " | "
        << v << " |\n";
    }
  }
  if (!r.homology.empty()) {
    o << "\n## Homology\n\n| collections | required | agree | reduced Betti numbers |\n|---|---|---|---|\n";
    for (const auto& h : r.homology) {
      std::string b;
      for (std::size_t i = 0; i < h.profiles.size(); ++i)
        b += (i ? "; " : "") + std::string(to_string(h.kinds[i])) + " " + betti_text(h.profiles[i]);
      o << "| " << h.name << " | " << (h.required ? "yes" : "no") << " | " << (!h.complete ? "undecided" : h.agree ? "yes" : "no") << " | " << b
        << " |\n";
    }
  }
  if (!r.annotations.empty()) {
    o << "\n## Notes\n\n";
    for (const auto& a : r.annotations) o << "- " << a << "\n";
  }
  return o.str();
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format) {
  if (!r.lattice) throw Error("report carries no lattice");
  if (format == ReportFormat::Markdown) return markdown(r);
  return report_json(r).dump(2) + "\n";
}

void write_report(const Report& r, ReportFormat format, const std::string& path) {
  const std::string text = emit_report(r, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("cannot open " + path + " for writing");
  out << text;
  if (!out.flush()) throw IOError("write to " + path + " failed");
}

}  // namespace sclab
