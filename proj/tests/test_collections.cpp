#include "doctest.h"

#include "sclab/collections.hpp"
#include "sclab/errors.hpp"
#include "support/helpers.hpp"
#include "support/suite.hpp"

using namespace sclab;
using testkit::as_set;
using testkit::as_sets;
using testkit::gen;
using testkit::lattice_of;
using testkit::of_order;

namespace {

std::vector<SubgroupId> members(const PrimeAnalysis& pa, CollectionKind k) {
  return pa.build_collection(k).members;
}

std::vector<SubgroupId> klein_fours(const SubgroupLattice& L) {
  std::vector<SubgroupId> out;
  for (SubgroupId h : of_order(L, 4))
    if (is_elementary_abelian(L, h, 2)) out.push_back(h);
  return out;
}

}  // namespace

TEST_CASE("central type elements") {
  const auto d8 = lattice_of("builtin:D8");
  const PrimeAnalysis pa(d8, 2);
  const Element z = testkit::elem(*d8, "(0 2)(1 3)");
  CHECK(pa.E0().count() == 1);
  CHECK(pa.E0().test(z));
  CHECK(pa.E1() == pa.E0());
  CHECK(compute_E0(*d8, 2) == pa.E0());
  CHECK(compute_E1(*d8, 2) == pa.E1());

  const auto q8 = lattice_of("builtin:Q8");
  const PrimeAnalysis pq(q8, 2);
  REQUIRE(pq.E0().count() == 1);
  CHECK(q8->group().element_order(static_cast<Element>(pq.E0().members()[0])) == 2);

  const auto z5 = lattice_of("builtin:Zn:5");
  CHECK(PrimeAnalysis(z5, 5).E0().count() == 4);

  // One class of involutions: E1 is every involution.
  const auto a5 = lattice_of("builtin:A5");
  const PrimeAnalysis pa5(a5, 2);
  CHECK(pa5.one_class_of_order_p());
  CHECK(pa5.E1().count() == 15);

  const auto s4 = lattice_of("builtin:S4");
  const auto naive = oracle::build(s4->group().generators());
  const PrimeAnalysis ps4(s4, 2);
  CHECK(as_set(*s4, ps4.E0()) == oracle::E0(naive, 2));
  CHECK(as_set(*s4, ps4.E1()) == oracle::E1(naive, 2));

  CHECK_THROWS_AS(compute_E0(*d8, 3), PrimeDoesNotDivide);
  CHECK_THROWS_AS(compute_E1(*d8, 5), PrimeDoesNotDivide);
  CHECK_THROWS_AS(PrimeAnalysis(d8, 3), PrimeDoesNotDivide);
  CHECK_THROWS_AS(PrimeAnalysis(d8, 4), PrimeDoesNotDivide);
}

TEST_CASE("tilde and hat operators") {
  const auto d8 = lattice_of("builtin:D8");
  const PrimeAnalysis pa(d8, 2);
  const SubgroupId z = gen(*d8, {"(0 2)(1 3)"});
  const SubgroupId reflection = gen(*d8, {"(0 2)"});
  CHECK(d8->leq(pa.omega1_center(d8->whole()), pa.tilde_of(d8->whole())));
  CHECK(pa.tilde_of(reflection) == d8->trivial());
  for (SubgroupId v : klein_fours(*d8)) CHECK(pa.tilde_of(v) == z);
  CHECK(pa.hat_of(gen(*d8, {"(0 1 2 3)"})) == z);
  CHECK(pa.hat_of(reflection) == d8->trivial());
  CHECK_FALSE(pa.is_distinguished(reflection));

  const auto s3 = lattice_of("builtin:S3");
  const PrimeAnalysis p3(s3, 2);
  CHECK_THROWS_AS(p3.tilde_of(s3->whole()), NotAPGroup);
  CHECK_THROWS_AS(p3.hat_of(s3->whole()), NotAPGroup);
  CHECK_THROWS_AS(p3.normalizer_core(s3->whole()), NotAPGroup);

  // p-centric subgroups are distinguished, with hat(P) above Ω1Z(S) for Sylow S ⊇ P.
  for (const char* src : {"builtin:S4", "builtin:SL23", "builtin:D12"}) {
    const auto L = lattice_of(src);
    const PrimeAnalysis p2(L, 2);
    for (SubgroupId q : p2.p_subgroups()) {
      if (!p2.is_p_centric(q)) continue;
      for (SubgroupId s : p2.sylows())
        if (L->leq(q, s)) CHECK(L->leq(p2.omega1_center(s), p2.hat_of(q)));
    }
  }
}

TEST_CASE("named collections of D8 and Q8") {
  const auto d8 = lattice_of("builtin:D8");
  const PrimeAnalysis pa(d8, 2);
  const SubgroupId z = gen(*d8, {"(0 2)(1 3)"});
  CHECK(members(pa, CollectionKind::E) == std::vector<SubgroupId>{z});
  auto tilde_a = klein_fours(*d8);
  tilde_a.insert(tilde_a.begin(), z);
  CHECK(members(pa, CollectionKind::TildeA) == tilde_a);
  CHECK(members(pa, CollectionKind::B) == std::vector<SubgroupId>{d8->whole()});
  CHECK(members(pa, CollectionKind::S).size() == 9);
  CHECK(members(pa, CollectionKind::A).size() == 7);

  const auto q8 = lattice_of("builtin:Q8");
  const PrimeAnalysis pq(q8, 2);
  CHECK(members(pq, CollectionKind::HatA) == of_order(*q8, 2));
  CHECK(members(pq, CollectionKind::HatB) == std::vector<SubgroupId>{q8->whole()});
}

TEST_CASE("radical, centric, principal") {
  const auto d8 = lattice_of("builtin:D8");
  const PrimeAnalysis pa(d8, 2);
  CHECK(pa.is_p_radical(d8->whole()));
  CHECK_FALSE(pa.is_p_radical(gen(*d8, {"(0 1 2 3)"})));
  CHECK(pa.is_p_centric(d8->whole()));
  CHECK_FALSE(pa.is_p_centric(gen(*d8, {"(0 2)(1 3)"})));
  CHECK(pa.is_principal_p_radical(d8->whole()));

  const auto s4 = lattice_of("builtin:S4");
  const PrimeAnalysis ps(s4, 2);
  CHECK(ps.is_p_radical(gen(*s4, {"(0 1)(2 3)", "(0 2)(1 3)"})));
  for (SubgroupId s : ps.sylows()) {
    CHECK(ps.is_p_centric(s));
    CHECK(ps.is_principal_p_radical(s));
  }
  const auto hat_b = ps.build_collection(CollectionKind::HatB);
  for (SubgroupId d : members(ps, CollectionKind::D)) CHECK(hat_b.contains(d));

  const auto q8 = lattice_of("builtin:Q8");
  const PrimeAnalysis pq(q8, 2);
  CHECK_FALSE(pq.is_p_centric(of_order(*q8, 2).front()));
}

TEST_CASE("conditions") {
  const auto d8 = lattice_of("builtin:D8");
  const PrimeAnalysis pa(d8, 2);
  for (Condition c : {Condition::M, Condition::Cl, Condition::Ch}) {
    const auto r = pa.check_condition(c);
    CHECK(r.holds);
    CHECK(r.witnesses.empty());
  }
  // One class of involutions forces (Cl).
  for (const char* src : {"builtin:A5", "builtin:S3", "builtin:SL23", "builtin:A4"})
    CHECK(PrimeAnalysis(lattice_of(src), 2).check_condition(Condition::Cl).holds);

  const auto d12 = lattice_of("builtin:D12");
  const auto ch = PrimeAnalysis(d12, 2).check_condition(Condition::Ch);
  CHECK_FALSE(ch.holds);
  REQUIRE_FALSE(ch.witnesses.empty());
  CHECK_FALSE(ch.witnesses.front().subgroups.empty());
  CHECK(ch.witnesses.size() <= 8);
}

TEST_CASE("conditions agree with the brute-force checks") {
  for (const auto& g : testkit::acceptance_suite()) {
    const auto L = lattice_of(g.source);
    if (L->group().order() > 48) continue;
    const auto naive = oracle::build(L->group().generators());
    for (int p : prime_divisors(L->group().order())) {
      CAPTURE(g.label);
      CAPTURE(p);
      const PrimeAnalysis pa(L, p);
      CHECK(pa.check_condition(Condition::Cl).holds == oracle::condition_cl(naive, p));
      CHECK(pa.check_condition(Condition::Ch).holds == oracle::condition_ch(naive, p));
      CHECK(pa.check_condition(Condition::M).holds == oracle::condition_m(naive, p));
    }
  }
}

TEST_CASE("equalities under (Ch)") {
  for (const char* src : {"builtin:D8", "builtin:Q8", "builtin:Zn:4"}) {
    const auto L = lattice_of(src);
    const auto r = PrimeAnalysis(L, 2).equalities_under_ch();
    CHECK(r.applicable);
    CHECK(r.equal);
    CHECK(r.common == std::vector<SubgroupId>{L->whole()});
  }
  const auto z3 = lattice_of("builtin:Zn:3");
  CHECK(PrimeAnalysis(z3, 3).equalities_under_ch().common == std::vector<SubgroupId>{z3->whole()});

  const auto s4 = lattice_of("builtin:S4");
  const PrimeAnalysis ps(s4, 2);
  const auto r = ps.equalities_under_ch();
  CHECK(r.applicable == ps.check_condition(Condition::Ch).holds);
  if (r.applicable) {
    CHECK(r.equal);
    CHECK(members(ps, CollectionKind::B) == members(ps, CollectionKind::HatB));
    CHECK(members(ps, CollectionKind::B) == members(ps, CollectionKind::Bcen));
  }

  const auto d12 = lattice_of("builtin:D12");
  CHECK_FALSE(PrimeAnalysis(d12, 2).equalities_under_ch().applicable);
}

TEST_CASE("collection kinds round-trip through their names") {
  for (CollectionKind k : all_collection_kinds()) CHECK(parse_collection_kind(to_string(k)) == k);
  CHECK_FALSE(parse_collection_kind("nope").has_value());
}

TEST_CASE("collections agree with the brute-force definitions") {
  for (const char* src : {"builtin:S4", "builtin:D12"}) {
    const auto L = lattice_of(src);
    const auto naive = oracle::build(L->group().generators());
    for (int p : prime_divisors(L->group().order())) {
      const PrimeAnalysis pa(L, p);
      for (CollectionKind k : all_collection_kinds()) {
        CAPTURE(src);
        CAPTURE(p);
        CAPTURE(to_string(k));
        CHECK(as_sets(*L, members(pa, k)) == oracle::collection(naive, p, k));
      }
    }
  }
}
