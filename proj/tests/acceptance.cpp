// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "sclab/collections.hpp"
#include "sclab/contractibility.hpp"
#include "sclab/homology.hpp"
#include "sclab/order_complex.hpp"
#include "sclab/poset.hpp"
#include "sclab/subgroup_ops.hpp"
#include "sclab/verifier.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"
#include "support/properties.hpp"
#include "support/suite.hpp"

using namespace sclab;
using testkit::Tally;

namespace {

using Clock = std::chrono::steady_clock;

struct Case {
  std::string label;
  int p;
  std::shared_ptr<const SubgroupLattice> L;
  Report report;
};

std::string tag(const Case& c) { return c.label + " p=" + std::to_string(c.p); }

// Every suite group at every prime, full verifier run, computed once.
std::vector<Case> suite_runs(const std::vector<testkit::SuiteGroup>& groups) {
  std::vector<Case> out;
  const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  for (const auto& g : groups) {
    const auto L = testkit::lattice_of(g.source);
    for (int p : prime_divisors(L->group().order()))
      out.push_back({g.label, p, L, run_suite(L, p, Suite::All, {}, jobs)});
  }
  return out;
}

GPoset poset(const PrimeAnalysis& pa, CollectionKind k) {
  return GPoset::of_subgroups(pa.lattice_ptr(), pa.build_collection(k).members);
}

std::size_t above(const GPoset& P, SubgroupId h) {
  return bounded_between(P, Bound{h, false}, std::nullopt).size();
}

GPoset below(const GPoset& P, SubgroupId h) { return bounded_between(P, std::nullopt, Bound{h, false}); }

bool holds(const Report& r, Condition c) {
  for (const auto& x : r.conditions)
    if (x.condition == c) return x.holds;
  return false;
}

void d8_tilde_facts(Tally& t) {
  const auto L = testkit::lattice_of("builtin:D8");
  const PrimeAnalysis pa(L, 2);
  const GPoset E = poset(pa, CollectionKind::E);
  const GPoset tA = poset(pa, CollectionKind::TildeA);
  const GPoset tS = poset(pa, CollectionKind::TildeS);
  const GPoset tB = poset(pa, CollectionKind::TildeB);
  t.check(E.size() == 1, "E has one member");

  const OrderComplex nerve = OrderComplex::of(tA);
  t.check(nerve.vertex_count() == 3, "tilde-A nerve has 3 vertices");
  t.check(nerve.count(1) == 2 && nerve.dimension() == 1, "tilde-A nerve has 2 edges");
  if (nerve.count(1) == 2) {
    const auto& e = nerve.simplices(1);
    const bool shared = std::any_of(e[0].begin(), e[0].end(),
                                    [&](auto v) { return std::find(e[1].begin(), e[1].end(), v) != e[1].end(); });
    t.check(shared, "the two edges share a vertex");
  }

  std::size_t kleins = 0;
  for (SubgroupId v : testkit::of_order(*L, 4)) {
    if (!is_elementary_abelian(*L, v, 2)) continue;
    ++kleins;
    const SubgroupId c = centralizer_of_subgroup(*L, v);
    t.check(above(E, v) == 0, "E above V4 is empty");
    t.check(above(tA, v) == 1, "tilde-A above V4 is a point");
    t.check(c == v, "V4 is self-centralizing");
    const OrderComplex edge = OrderComplex::of(below(tS, c));
    t.check(edge.vertex_count() == 2 && edge.count(1) == 1 && edge.dimension() == 1,
            "tilde-S below C(V4) is one edge");
    t.check(below(tB, c).empty(), "tilde-B below C(V4) is empty");
  }
  t.check(kleins == 2, "two Klein four subgroups");

  const auto z4 = testkit::gen(*L, {"(0 1 2 3)"});
  t.check(above(tA, z4) == 0, "tilde-A above Z4 is empty");
  t.check(contractibility_verdict(bounded_between(tS, Bound{z4, false}, std::nullopt)).contractible(),
          "tilde-S above Z4 is contractible");
}

void d8_hat_facts(Tally& t) {
  const auto L = testkit::lattice_of("builtin:D8");
  const PrimeAnalysis pa(L, 2);
  for (Condition c : {Condition::M, Condition::Cl, Condition::Ch})
    t.check(pa.check_condition(c).holds, std::string("condition ") + std::string(to_string(c)) + " holds");
  const auto z4 = testkit::gen(*L, {"(0 1 2 3)"});
  const GPoset hA = poset(pa, CollectionKind::HatA);
  const GPoset hB = poset(pa, CollectionKind::HatB);
  t.check(above(hA, z4) == 0, "hat-A above Z4 is empty");
  t.check(contractibility_verdict(fixed_point_subposet(hA, z4)).contractible(), "hat-A fixed by Z4 contractible");
  t.check(below(hB, centralizer_of_subgroup(*L, z4)).empty(), "hat-B below C(Z4) is empty");
  t.check(contractibility_verdict(fixed_point_subposet(hB, z4)).contractible(), "hat-B fixed by Z4 contractible");
}

void certified_steps(const EdgeResult& e, Tally& t, const std::string& where) {
  for (const auto& s : e.steps) {
    t.check(s.status == CheckStatus::Pass, where + " step " + s.id + " passes");
    t.check(s.explicit_certified == s.elements_checked, where + " step " + s.id + " fully certified");
  }
}

void table31_edges(const std::vector<Case>& cases, Tally& t) {
  for (const auto& c : cases) {
    bool retraction_seen = false;
    for (const auto& e : c.report.edges) {
      if (e.table != "table31") continue;
      const std::string where = tag(c) + " " + e.name();
      t.check(e.status != EdgeStatus::Mismatch, where + " has no mismatch");
      if (e.style == LineStyle::Dotted) continue;
      t.check(e.status == EdgeStatus::Certified, where + " certified");
      certified_steps(e, t, where);
      for (const auto& s : e.steps) {
        if (s.id != "retraction-onto-overgroups") continue;
        retraction_seen = true;
        const PrimeAnalysis pa(c.L, c.p);
        bool every_sylow_size = true;
        for (SubgroupId syl : pa.sylows())
          every_sylow_size &= c.L->subgroups_of(syl).size() == s.elements_checked;
        t.check(every_sylow_size, where + " retraction covers every H <= S");
      }
    }
    t.check(retraction_seen, tag(c) + " retraction step present");
  }
}

void table44_edges(const std::vector<Case>& cases, Tally& t) {
  std::size_t skipped = 0;
  for (const auto& c : cases) {
    for (const auto& e : c.report.edges) {
      if (e.table != "table44") continue;
      const std::string where = tag(c) + " " + e.name();
      t.check(e.status != EdgeStatus::Mismatch, where + " has no mismatch");
      if (e.hypotheses.empty()) continue;
      const bool some = std::any_of(e.hypotheses.begin(), e.hypotheses.end(),
                                    [&](Condition h) { return holds(c.report, h); });
      if (some) {
        t.check(e.status == EdgeStatus::Certified, where + " certified under a holding hypothesis");
        certified_steps(e, t, where);
        for (const auto& s : e.steps)
          if (s.hypothesis) t.check(holds(c.report, *s.hypothesis), where + " step uses a holding hypothesis");
      } else {
        t.check(e.status == EdgeStatus::Skipped, where + " skipped");
        ++skipped;
        t.check(e.failing_conditions.size() == e.hypotheses.size(), where + " lists every failing condition");
        for (const auto& f : e.failing_conditions)
          t.check(!f.holds && !f.witnesses.empty(), where + " failing condition has witnesses");
      }
    }
  }
  t.check(skipped > 0, "the skipped branch is exercised");
}

void inclusion_chain(const std::vector<Case>& cases, Tally& t) {
  using K = CollectionKind;
  const std::vector<std::pair<K, K>> chain = {
      {K::D, K::Bcen},          {K::Bcen, K::HatB},       {K::HatB, K::B},
      {K::Ce, K::HatS},         {K::HatA, K::TildeA},     {K::TildeA, K::A},
      {K::HatS, K::TildeS},     {K::TildeS, K::S},        {K::HatB, K::TildeB},
      {K::TildeB, K::B},        {K::E, K::TildeA},
  };
  for (const auto& c : cases) {
    const PrimeAnalysis pa(c.L, c.p);
    for (const auto& [a, b] : chain) {
      const auto small = pa.build_collection(a);
      const auto big = pa.build_collection(b);
      for (SubgroupId h : small.members)
        t.check(big.contains(h), tag(c) + " " + std::string(to_string(a)) + " in " + std::string(to_string(b)));
    }
    for (const auto& i : c.report.inclusions) {
      if (i.equality) continue;
      t.check(i.holds && i.violations.empty(), tag(c) + " report: " + i.name);
    }
  }
}

void equalities_under_ch(const std::vector<Case>& cases, Tally& t) {
  std::size_t applicable = 0;
  for (const auto& c : cases) {
    const PrimeAnalysis pa(c.L, c.p);
    if (!pa.check_condition(Condition::Ch).holds) continue;
    ++applicable;
    const auto b = pa.build_collection(CollectionKind::B).members;
    t.check(b == pa.build_collection(CollectionKind::HatB).members, tag(c) + " B = hat-B");
    t.check(b == pa.build_collection(CollectionKind::Bcen).members, tag(c) + " B = Bcen");
  }
  t.check(applicable > 0, "some suite member satisfies (Ch)");
}

void homology_agreement(const std::vector<Case>& cases, Tally& t) {
  using K = CollectionKind;
  for (const auto& c : cases) {
    const PrimeAnalysis pa(c.L, c.p);
    std::map<K, HomologyProfile> h;
    for (K k : {K::A, K::S, K::B, K::E, K::TildeA, K::TildeS, K::TildeB, K::HatA, K::HatS, K::HatB}) {
      const OrderComplex nerve = OrderComplex::of(poset(pa, k));
      testkit::check_complex(nerve, t, tag(c) + " " + std::string(to_string(k)));
      h[k] = homology(nerve);
    }
    auto same = [&](K a, K b) {
      t.check(h[a].same_homology(h[b]) && h[a].empty == h[b].empty,
              tag(c) + " " + std::string(to_string(a)) + " ~ " + std::string(to_string(b)));
    };
    same(K::A, K::S);
    same(K::S, K::B);
    for (K k : {K::TildeA, K::TildeS, K::TildeB}) same(K::E, k);
    same(K::HatA, K::HatS);

    bool hat_b_certified = false;
    for (const auto& e : c.report.edges)
      if (e.name() == "table44 row nerve: hat-S -- hat-B") hat_b_certified = e.status == EdgeStatus::Certified;
    if (hat_b_certified) same(K::HatS, K::HatB);
    for (const auto& hc : c.report.homology)
      if (hc.required) t.check(hc.agree, tag(c) + " report: " + hc.name);
  }
}

void oracle_collections(Tally& t) {
  std::size_t groups = 0;
  for (const auto& g : testkit::acceptance_suite()) {
    const auto L = testkit::lattice_of(g.source);
    if (L->group().order() > 48) continue;
    ++groups;
    const auto naive = oracle::build(L->group().generators());
    t.check(naive.subgroups.size() == L->size(), g.label + " subgroup count");
    for (int p : prime_divisors(L->group().order())) {
      const PrimeAnalysis pa(L, p);
      t.check(testkit::as_set(*L, pa.E0()) == oracle::E0(naive, p), g.label + " E0");
      t.check(testkit::as_set(*L, pa.E1()) == oracle::E1(naive, p), g.label + " E1");
      for (CollectionKind k : all_collection_kinds())
        t.check(testkit::as_sets(*L, pa.build_collection(k).members) == oracle::collection(naive, p, k),
                g.label + " p=" + std::to_string(p) + " " + std::string(to_string(k)));
    }
  }
  t.check(groups >= 10, "at least ten groups of order <= 48");
}

bool report(int id, const std::string& title, const std::function<void(Tally&)>& body) {
  Tally t;
  const auto t0 = Clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("%s %d %s (%zu checks, %.1fs)\n", t.clean() ? "PASS" : "FAIL", id, title.c_str(), t.assertions, secs);
  for (const auto& f : t.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  return t.clean();
}

}  // namespace

int main() {
  const auto start = Clock::now();
  std::vector<Case> cases;
  std::vector<Case> with_extras;
  {
    const auto t0 = Clock::now();
    cases = suite_runs(testkit::acceptance_suite());
    const std::string data = SCLAB_TEST_DATA;
    with_extras = suite_runs({{"cl_fails_96", data + "/cl_fails_96.grp"},
                              {"cl_ch_fail_288", data + "/cl_ch_fail_288.grp"},
                              {"pgl2_7", data + "/pgl2_7.grp"}});
    std::printf("verifier runs: %zu suite cases, %zu extra, %.1fs\n", cases.size(), with_extras.size(),
                std::chrono::duration<double>(Clock::now() - t0).count());
  }
  std::vector<Case> all44 = cases;
  all44.insert(all44.end(), with_extras.begin(), with_extras.end());

  bool ok = true;
  ok &= report(1, "D8 tilde collections: exact local facts", d8_tilde_facts);
  ok &= report(2, "D8 hat collections: conditions and fixed points", d8_hat_facts);
  ok &= report(3, "table31 solid and dashed edges certified on the suite",
               [&](Tally& t) { table31_edges(cases, t); });
  ok &= report(4, "table44 labeled edges certified or skipped with witnesses",
               [&](Tally& t) { table44_edges(all44, t); });
  ok &= report(5, "inclusion chain", [&](Tally& t) { inclusion_chain(cases, t); });
  ok &= report(6, "B = hat-B = Bcen under (Ch)", [&](Tally& t) { equalities_under_ch(cases, t); });
  ok &= report(7, "homology agreement", [&](Tally& t) { homology_agreement(cases, t); });
  ok &= report(8, "randomized invariants, at least 10000 assertions", [](Tally& t) {
    const Tally props = testkit::run_properties(20261017);
    t.assertions += props.assertions;
    t.failures = props.failures;
    t.check(props.assertions >= 10000, "assertion count " + std::to_string(props.assertions));
  });
  ok &= report(9, "brute-force collections for order <= 48", oracle_collections);

  std::printf("total %.1fs\n", std::chrono::duration<double>(Clock::now() - start).count());
  return ok ? 0 : 1;
}
