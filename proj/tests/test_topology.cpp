#include "doctest.h"

#include "sclab/collections.hpp"
#include "sclab/contractibility.hpp"
#include "sclab/equivalence.hpp"
#include "sclab/errors.hpp"
#include "sclab/homology.hpp"
#include "support/helpers.hpp"
#include "support/properties.hpp"
#include "support/suite.hpp"

using namespace sclab;
using testkit::gen;
using testkit::lattice_of;
using testkit::of_order;

namespace {

struct D8 {
  std::shared_ptr<const SubgroupLattice> L = lattice_of("builtin:D8");
  PrimeAnalysis pa{L, 2};
  SubgroupId z = gen(*L, {"(0 2)(1 3)"});
  SubgroupId z4 = gen(*L, {"(0 1 2 3)"});
  SubgroupId v4 = gen(*L, {"(0 2)", "(1 3)"});

  GPoset poset(CollectionKind k) const {
    return GPoset::of_subgroups(L, pa.build_collection(k).members);
  }
};

GPoset chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t i = 0; i + 1 < n; ++i) less.push_back({i, i + 1});
  return GPoset::from_relation(n, less);
}

GPoset antichain(std::size_t n) { return GPoset::from_relation(n, {}); }

}  // namespace

TEST_CASE("order complexes") {
  const OrderComplex point = OrderComplex::of(chain(1));
  CHECK(point.vertex_count() == 1);
  CHECK(point.dimension() == 0);

  const OrderComplex simplex = OrderComplex::of(chain(4));
  CHECK(simplex.dimension() == 3);
  CHECK(simplex.count(0) == 4);
  CHECK(simplex.count(1) == 6);
  CHECK(simplex.count(2) == 4);
  CHECK(simplex.count(3) == 1);

  const D8 d8;
  const OrderComplex nerve = OrderComplex::of(d8.poset(CollectionKind::TildeA));
  CHECK(nerve.count(0) == 3);
  CHECK(nerve.count(1) == 2);
  CHECK(nerve.count(2) == 0);
  const auto edges = nerve.simplices(1);
  CHECK(((edges[0][0] == edges[1][0]) || (edges[0][1] == edges[1][1])));

  CHECK(OrderComplex::of(GPoset{}).empty());
  CHECK_THROWS_AS(OrderComplex::of(chain(6), 10), SizeCap);
  CHECK_THROWS_AS(GPoset::from_relation(2, {{0, 1}, {1, 0}}), Error);
}

TEST_CASE("facet text export") {
  const D8 d8;
  const GPoset p = d8.poset(CollectionKind::TildeA);
  const std::string text = OrderComplex::of(p).to_facet_text();
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.find(std::to_string(d8.z.value) + " " + std::to_string(d8.v4.value)) != std::string::npos);
}

TEST_CASE("fixed points and intervals") {
  const D8 d8;
  const GPoset hat_a = d8.poset(CollectionKind::HatA);
  CHECK(fixed_point_subposet(hat_a, d8.L->trivial()) == hat_a);
  CHECK(fixed_point_subposet(hat_a, d8.z4) == hat_a);
  CHECK(hat_a.size() == 3);
  CHECK(contractibility_verdict(hat_a).contractible());

  const GPoset hat_b = fixed_point_subposet(d8.poset(CollectionKind::HatB), d8.z4);
  REQUIRE(hat_b.size() == 1);
  CHECK(hat_b.subgroup(0) == d8.L->whole());

  CHECK(interval_above(d8.poset(CollectionKind::E), d8.v4).empty());
  const SubgroupId c = centralizer_of_subgroup(*d8.L, d8.v4);
  CHECK(c == d8.v4);
  const GPoset low = interval_below(d8.poset(CollectionKind::TildeS), c);
  CHECK(low.subgroups() == std::vector<SubgroupId>{d8.z, d8.v4});
  CHECK(interval_above(d8.poset(CollectionKind::TildeA), d8.z4).empty());
  const GPoset above = interval_above(d8.poset(CollectionKind::TildeS), d8.z4);
  CHECK(OrderComplex::of(above).count(1) >= 1);
  CHECK(contractibility_verdict(above).contractible());

  const GPoset strictly = interval_above(d8.poset(CollectionKind::TildeS), d8.z4, true);
  CHECK(strictly.subgroups() == std::vector<SubgroupId>{d8.L->whole()});
  CHECK(contractibility_verdict(strictly).contractible());

  const GPoset between = bounded_between(d8.poset(CollectionKind::S), Bound{d8.z, true},
                                         Bound{d8.L->whole(), true});
  CHECK(between.size() == 3);
  CHECK(d8.poset(CollectionKind::TildeS).invariant_under(d8.L->whole()));
}

TEST_CASE("homology") {
  const HomologyProfile point = homology(OrderComplex::of(chain(1)));
  CHECK(point.acyclic());
  CHECK(point.euler_characteristic == 1);

  const HomologyProfile circle = homology(OrderComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(circle.reduced_betti == std::vector<std::size_t>{0, 1});

  const HomologyProfile two = homology(OrderComplex::of(antichain(2)));
  CHECK(two.reduced_betti == std::vector<std::size_t>{1});
  CHECK_FALSE(two.connected());

  const HomologyProfile empty = homology(OrderComplex{});
  CHECK(empty.empty);
  CHECK_FALSE(empty.acyclic());

  // Six-vertex projective plane: H1 = Z/2, nothing else.
  const std::vector<Simplex> rp2 = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                    {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}};
  const OrderComplex rp = OrderComplex::from_facets(6, rp2);
  const HomologyProfile h = homology(rp);
  CHECK(h.reduced_betti == std::vector<std::size_t>{0, 0, 0});
  REQUIRE(h.torsion.size() == 3);
  CHECK(h.torsion[1] == std::vector<mpz_class>{2});
  CHECK(h.torsion[2].empty());
  CHECK(h.euler_characteristic == 1);
  CHECK(rank_mod_p(boundary_matrix(rp, 2), 2) == 9);
  CHECK(rank_mod_p(boundary_matrix(rp, 2), 3) == 10);

  const auto j = to_json(h);
  CHECK(j["reduced_betti"] == nlohmann::json::array({0, 0, 0}));
  CHECK(j["torsion"][1][0] == "2");

  testkit::Tally t;
  testkit::check_complex(rp, t, "RP2");
  const auto s4 = lattice_of("builtin:S4");
  const PrimeAnalysis pa(s4, 2);
  testkit::check_complex(
      OrderComplex::of(GPoset::of_subgroups(s4, pa.build_collection(CollectionKind::A).members)), t,
      "A_2(S4)");
  CHECK(t.assertions > 0);
  CHECK(t.clean());
}

TEST_CASE("contractibility verdicts") {
  const Verdict cone = contractibility_verdict(GPoset::from_relation(3, {{0, 1}, {0, 2}}));
  CHECK(cone.status == Contractibility::Contractible);
  CHECK(cone.evidence == Evidence::Cone);

  const Verdict two = contractibility_verdict(antichain(2));
  CHECK(two.status == Contractibility::NotContractible);
  CHECK(two.evidence == Evidence::Disconnected);

  const Verdict none = contractibility_verdict(GPoset{});
  CHECK(none.status == Contractibility::NotContractible);
  CHECK(none.evidence == Evidence::Empty);

  // Crown: 2 minima below 2 maxima, a circle.
  const GPoset crown = GPoset::from_relation(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const Verdict c = contractibility_verdict(crown);
  CHECK(c.status == Contractibility::NotContractible);
  CHECK(c.evidence == Evidence::Homology);
  CHECK(reverify(crown, c));

  const OrderComplex rp = OrderComplex::from_facets(
      6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
  CHECK(contractibility_verdict(rp).status == Contractibility::NotContractible);

  // A filled square collapses to a point.
  const OrderComplex disk = OrderComplex::from_facets(4, {{0, 1, 2}, {0, 2, 3}});
  const Verdict d = contractibility_verdict(disk);
  CHECK(d.contractible());
  CHECK(fundamental_group_trivial(disk));
  CHECK_FALSE(fundamental_group_trivial(OrderComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}})));
  if (d.evidence == Evidence::Collapse) CHECK(replay_collapses(disk, d.collapses));

  const D8 d8;
  const GPoset ts = d8.poset(CollectionKind::TildeS);
  const Verdict v = contractibility_verdict(ts);
  CHECK(v.contractible());
  CHECK(reverify(ts, v));
  CHECK(component_count(d8.poset(CollectionKind::S)) == 1);
  CHECK(equivariant_contractibility(ts, d8.L->whole()).contractible());
}

TEST_CASE("conical contractions") {
  const D8 d8;
  const auto& L = *d8.L;
  const GPoset cone = interval_below(d8.poset(CollectionKind::A), d8.z);
  CHECK(verify_conical_contraction(cone, constant_map(cone, 0), 0, Direction::Up));

  // Q -> Q·tilde(P) on the elementary abelian part below P = D8.
  const GPoset ta = d8.poset(CollectionKind::TildeA);
  const SubgroupId tp = d8.pa.tilde_of(L.whole());
  const PosetMap f = tabulate(ta, [&](SubgroupId q) { return subgroup_product(L, q, tp); });
  const std::size_t apex = *ta.index_of(tp);
  CHECK(verify_conical_contraction(ta, f, apex, Direction::Up, L.whole()));

  // Same with the hat operator on hat-A.
  const GPoset ha = d8.poset(CollectionKind::HatA);
  const SubgroupId hp = d8.pa.hat_of(L.whole());
  const PosetMap g = tabulate(ha, [&](SubgroupId q) { return subgroup_product(L, q, hp); });
  CHECK(verify_conical_contraction(ha, g, *ha.index_of(hp), Direction::Up, L.whole()));

  // Direction matters.
  CHECK_FALSE(verify_conical_contraction(ta, f, apex, Direction::Down));
  // Shape errors throw; maps leaving the poset are rejected at tabulation.
  CHECK_THROWS_AS(verify_conical_contraction(ta, PosetMap{0}, 0, Direction::Up), MapNotWellDefined);
  CHECK_THROWS_AS(tabulate(ta, [&](SubgroupId) { return L.whole(); }), MapNotWellDefined);

  // A constant map onto one of the two conjugate Klein fours is not D8-equivariant.
  const std::size_t v = *ta.index_of(d8.v4);
  PosetMap to_v(ta.size(), v);
  CHECK(verify_conical_contraction(interval_below(ta, d8.v4), PosetMap(2, 1), 1, Direction::Up));
  const GPoset ts = d8.poset(CollectionKind::S);
  const auto maybe = find_conical_contraction(ts);
  REQUIRE(maybe.has_value());
  CHECK(verify_conical_contraction(ts, *maybe));
  CHECK_FALSE(verify_conical_contraction(ta, to_v, v, Direction::Up, L.whole()));
}

TEST_CASE("zigzags") {
  const GPoset three = chain(3);
  Zigzag identity;
  const auto r = verify_zigzag(three, identity);
  CHECK(r.ok);
  CHECK_FALSE(r.contracts);
  CHECK(verify_zigzag(chain(1), identity).contracts);

  Zigzag up{{PosetMap{2, 2, 2}}, {Comparison::Le}, "x <= top"};
  const auto u = verify_zigzag(three, up);
  CHECK(u.ok);
  CHECK(u.contracts);

  Zigzag wrong{{PosetMap{0, 0, 0}}, {Comparison::Le}, "x <= bottom"};
  CHECK_THROWS_AS(verify_zigzag(three, wrong), ComparisonFails);
  Zigzag uneven{{PosetMap{2, 2, 2}}, {}, ""};
  CHECK_THROWS_AS(verify_zigzag(three, uneven), MapNotWellDefined);

  // The normalizer zigzag on tilde-S_{>P} for P in tilde-S \ tilde-B of D8.
  const D8 d8;
  const auto& L = *d8.L;
  const GPoset ts = d8.poset(CollectionKind::TildeS);
  const auto tb = d8.pa.build_collection(CollectionKind::TildeB);
  std::size_t checked = 0;
  for (SubgroupId p : ts.subgroups()) {
    if (tb.contains(p)) continue;
    const GPoset up_p = interval_above(ts, p, true);
    const SubgroupId o = d8.pa.normalizer_core(p);
    Zigzag z;
    z.maps.push_back(tabulate(up_p, [&](SubgroupId q) { return relative_normalizer(L, q, p); }));
    z.maps.push_back(tabulate(up_p, [&](SubgroupId q) {
      return subgroup_product(L, relative_normalizer(L, q, p), o);
    }));
    z.maps.push_back(tabulate(up_p, [&](SubgroupId) { return o; }));
    z.comparisons = {Comparison::Ge, Comparison::Le, Comparison::Ge};
    const auto res = verify_zigzag(up_p, z, d8.pa.normalizer(p));
    CHECK(res.ok);
    CHECK(res.contracts);
    ++checked;
  }
  CHECK(checked == ts.size() - tb.size());
}

TEST_CASE("inclusion criteria") {
  const D8 d8;
  const GPoset e = d8.poset(CollectionKind::E);
  const GPoset ta = d8.poset(CollectionKind::TildeA);
  const GPoset ts = d8.poset(CollectionKind::TildeS);

  const auto r1 = verify_inclusion_equivalence(e, ta, InclusionMode::LowerFibers);
  CHECK(r1.status == CheckStatus::Pass);
  CHECK(r1.checks.size() == ta.size());

  const auto r2 = verify_inclusion_equivalence(ta, ts, InclusionMode::LowerFibers);
  CHECK(r2.status == CheckStatus::Pass);

  // Lower links of tilde-A \ E are cones on tilde(P): Q >= tilde(Q) <= tilde(P).
  const auto& L = *d8.L;
  CertificateProvider provider = [&](SubgroupId y, const GPoset& local) -> std::optional<ExplicitCertificate> {
    const SubgroupId apex = d8.pa.tilde_of(y);
    ExplicitCertificate c;
    c.conical = ConicalCertificate{
        tabulate(local, [&](SubgroupId q) { return d8.pa.tilde_of(q); }), *local.index_of(apex),
        Direction::Down, "Q -> tilde(Q)"};
    c.description = "Q >= tilde(Q) <= tilde(P)";
    (void)L;
    return c;
  };
  const auto r3 = verify_inclusion_equivalence(e, ta, InclusionMode::LowerLinks, provider);
  CHECK(r3.status == CheckStatus::Pass);
  CHECK(r3.all_explicit);
  CHECK(r3.checks.size() == ta.size() - e.size());

  // The constant map on the full interval has the wrong apex for the lower link.
  CertificateProvider bogus = [&](SubgroupId, const GPoset& local) -> std::optional<ExplicitCertificate> {
    ExplicitCertificate c;
    c.conical = ConicalCertificate{PosetMap(local.size() + 1, 0), 0, Direction::Up, "bad shape"};
    c.description = "bad shape";
    return c;
  };
  const auto r4 = verify_inclusion_equivalence(e, ta, InclusionMode::LowerLinks, bogus);
  CHECK(r4.status == CheckStatus::Pass);
  CHECK_FALSE(r4.all_explicit);

  CHECK_THROWS_AS(verify_inclusion_equivalence(ts, ta, InclusionMode::LowerFibers), NotASubposet);

  // S_2(D8) into itself plus the trivial group is not an equivalence at the bottom.
  const GPoset s = d8.poset(CollectionKind::S);
  const GPoset hb = d8.poset(CollectionKind::HatB);
  const auto r5 = verify_inclusion_equivalence(hb, s, InclusionMode::UpperLinks);
  CHECK(r5.status == CheckStatus::Pass);
  const GPoset two = GPoset::of_subgroups(d8.L, {d8.v4, gen(L, {"(0 1)(2 3)", "(0 3)(1 2)"})});
  const auto r6 = verify_inclusion_equivalence(two, d8.poset(CollectionKind::A), InclusionMode::LowerFibers);
  CHECK(r6.status == CheckStatus::Fail);
  CHECK(r6.witness.has_value());
}

TEST_CASE("fixed point scans") {
  const D8 d8;
  const auto& L = *d8.L;
  const GPoset ts = d8.poset(CollectionKind::TildeS);
  const auto all = L.subgroups_of(L.whole());
  const auto scan = fixed_point_equivalence_scan(all, [&](SubgroupId h) { return above_in_fixed(ts, h); });
  REQUIRE(scan.size() == 10);
  for (const auto& e : scan) CHECK(e.status == ScanStatus::Certified);

  const auto ha = compare_avatars(above_in_fixed(d8.poset(CollectionKind::HatA), d8.z4), d8.z4);
  CHECK(ha.status == ScanStatus::Mismatch);
  CHECK(ha.sub_size == 0);
  CHECK(ha.ambient_size == 3);

  const auto hb = compare_avatars(centralized_in_fixed(d8.poset(CollectionKind::HatB), d8.z4), d8.z4);
  CHECK(hb.status == ScanStatus::Mismatch);
  CHECK(hb.sub_size == 0);
  CHECK(hb.ambient_size == 1);

  const auto same = compare_avatars(fixed_in_fixed(ts, ts, d8.z), d8.z);
  CHECK(same.status == ScanStatus::Certified);
  CHECK_THROWS_AS(compare_avatars(fixed_in_fixed(ts, d8.poset(CollectionKind::E), d8.z), d8.z),
                  NotASubposet);
}
