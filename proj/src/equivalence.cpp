#include "sclab/equivalence.hpp"

#include "sclab/errors.hpp"
#include "sclab/subgroup_ops.hpp"

namespace sclab {

std::string_view to_string(InclusionMode m) {
  switch (m) {
    case InclusionMode::LowerFibers:
      return "lower-fibers";
    case InclusionMode::UpperLinks:
      return "upper-links";
    case InclusionMode::LowerLinks:
      return "lower-links";
    case InclusionMode::UpperLinksEquivariant:
      return "upper-links-equivariant";
  }
  return "?";
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

std::string_view to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::Certified:
      return "CERTIFIED";
    case ScanStatus::HomologyConsistent:
      return "HOMOLOGY-CONSISTENT";
    case ScanStatus::Mismatch:
      return "MISMATCH";
  }
  return "?";
}

CheckResult check_explicit(const GPoset& local, const ExplicitCertificate& cert,
                           std::optional<SubgroupId> equivariance) {
  try {
    if (cert.conical) {
      if (local.empty()) return CheckResult::fail("local poset is empty");
      return verify_conical_contraction(local, *cert.conical, equivariance);
    }
    if (cert.zigzag) {
      auto r = verify_zigzag(local, *cert.zigzag, equivariance);
      if (!r.ok) return CheckResult::fail(r.reason);
      if (!r.contracts) return CheckResult::fail("zigzag does not end in a constant map");
      return CheckResult::pass();
    }
    return CheckResult::fail("no certificate supplied");
  } catch (const MapNotWellDefined& e) {
    return CheckResult::fail(e.what());
  } catch (const ComparisonFails& e) {
    return CheckResult::fail(e.what());
  }
}

InclusionReport verify_inclusion_equivalence(const GPoset& sub, const GPoset& ambient,
                                             InclusionMode mode, const CertificateProvider& provider,
                                             const ContractibilityOptions& opts, bool equivariant) {
  if (!sub.has_lattice() || !sub.is_subposet_of(ambient))
    throw NotASubposet("inclusion source is not a subposet of the target");
  const SubgroupLattice& L = ambient.lattice();
  InclusionReport report;
  report.mode = mode;

  for (std::size_t i = 0; i < ambient.size(); ++i) {
    const SubgroupId y = ambient.subgroup(i);
    GPoset local;
    std::optional<SubgroupId> eq;
    switch (mode) {
      case InclusionMode::LowerFibers:
        local = interval_below(sub, y);
        if (equivariant) eq = normalizer(L, y);
        break;
      case InclusionMode::UpperLinks:
      case InclusionMode::UpperLinksEquivariant:
        if (sub.contains(y)) continue;
        local = interval_above(ambient, y, true);
        if (mode == InclusionMode::UpperLinksEquivariant) eq = normalizer(L, y);
        break;
      case InclusionMode::LowerLinks:
        if (sub.contains(y)) continue;
        local = interval_below(ambient, y, true);
        break;
    }

    ElementCheck check;
    check.element = y;
    check.local_size = local.size();
    std::optional<ExplicitCertificate> cert;
    if (provider) {
      try {
        cert = provider(y, local);
      } catch (const MapNotWellDefined& e) {
        check.evidence = std::string("supplied map rejected: ") + e.what() + "; ";
      }
    }
    if (cert) {
      const auto r = check_explicit(local, *cert, eq);
      if (r) {
        check.status = Contractibility::Contractible;
        check.explicit_certified = true;
        check.evidence = cert->description;
      } else {
        check.evidence = cert->description + " rejected: " + r.reason + "; ";
      }
    }
    if (!check.explicit_certified) {
      report.all_explicit = false;
      const Verdict v = eq ? equivariant_contractibility(local, *eq, opts)
                           : contractibility_verdict(local, opts);
      check.status = v.status;
      check.evidence += std::string(to_string(v.evidence)) + ": " + v.reason;
    }
    if (check.status == Contractibility::NotContractible) {
      report.status = CheckStatus::Fail;
      if (!report.witness) report.witness = y;
    } else if (check.status == Contractibility::Unknown && report.status == CheckStatus::Pass) {
      report.status = CheckStatus::Inconclusive;
      if (!report.witness) report.witness = y;
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

namespace {

bool try_retraction(const AvatarPair& pair, const Retraction& r, std::string& evidence) {
  try {
    const PosetMap f = tabulate(pair.ambient, r.map);
    if (verify_monotone_retraction(pair.ambient, f, pair.sub, r.direction)) {
      evidence = "retraction " + r.name + " of " + pair.ambient_name + " onto " + pair.sub_name;
      return true;
    }
  } catch (const MapNotWellDefined&) {
  }
  return false;
}

bool all_fibers_contractible(const GPoset& sub, const GPoset& ambient, bool lower,
                             const ContractibilityOptions& opts) {
  for (SubgroupId y : ambient.subgroups()) {
    const GPoset fiber = lower ? interval_below(sub, y) : interval_above(sub, y);
    if (!contractibility_verdict(fiber, opts).contractible()) return false;
  }
  return true;
}

}  // namespace

ScanEntry compare_avatars(const AvatarPair& pair, SubgroupId h, const ContractibilityOptions& opts) {
  ScanEntry e;
  e.h = h;
  e.sub_size = pair.sub.size();
  e.ambient_size = pair.ambient.size();
  if (!pair.sub.is_subposet_of(pair.ambient))
    throw NotASubposet(pair.sub_name + " is not contained in " + pair.ambient_name);

  if (pair.sub == pair.ambient) {
    e.status = ScanStatus::Certified;
    e.evidence = pair.sub.empty() ? "both empty" : "equal posets";
    return e;
  }
  if (pair.sub.empty()) {
    e.status = ScanStatus::Mismatch;
    e.evidence = pair.sub_name + " is empty but " + pair.ambient_name + " is not";
    return e;
  }

  for (const auto& r : pair.retractions)
    if (try_retraction(pair, r, e.evidence)) {
      e.status = ScanStatus::Certified;
      return e;
    }
  const SubgroupLattice& L = pair.ambient.lattice();
  const SubgroupId c = centralizer_of_subgroup(L, h);
  const Retraction automatic[] = {
      {"Q -> <Q, H>", [&](SubgroupId q) { return L.join(q, h); }, Direction::Up},
      {"Q -> Q ∩ C_G(H)", [&](SubgroupId q) { return L.meet(q, c); }, Direction::Down},
  };
  for (const auto& r : automatic)
    if (try_retraction(pair, r, e.evidence)) {
      e.status = ScanStatus::Certified;
      return e;
    }

  if (all_fibers_contractible(pair.sub, pair.ambient, true, opts)) {
    e.status = ScanStatus::Certified;
    e.evidence = "every lower fiber of the inclusion is contractible";
    return e;
  }
  if (all_fibers_contractible(pair.sub, pair.ambient, false, opts)) {
    e.status = ScanStatus::Certified;
    e.evidence = "every upper fiber of the inclusion is contractible";
    return e;
  }
  const Verdict vs = contractibility_verdict(pair.sub, opts);
  const Verdict va = contractibility_verdict(pair.ambient, opts);
  if (vs.contractible() && va.contractible()) {
    e.status = ScanStatus::Certified;
    e.evidence = "both sides contractible";
    return e;
  }
  e.sub_homology = homology(OrderComplex::of(pair.sub, opts.max_simplices));
  e.ambient_homology = homology(OrderComplex::of(pair.ambient, opts.max_simplices));
  if (e.sub_homology->same_homology(*e.ambient_homology)) {
    e.status = ScanStatus::HomologyConsistent;
    e.evidence = "reduced homology agrees";
  } else {
    e.status = ScanStatus::Mismatch;
    e.evidence = "reduced homology differs";
  }
  return e;
}

std::vector<ScanEntry> fixed_point_equivalence_scan(
    const std::vector<SubgroupId>& hs, const std::function<AvatarPair(SubgroupId)>& avatars,
    const ContractibilityOptions& opts) {
  std::vector<ScanEntry> out;
  out.reserve(hs.size());
  for (SubgroupId h : hs) out.push_back(compare_avatars(avatars(h), h, opts));
  return out;
}

AvatarPair above_in_fixed(const GPoset& c, SubgroupId h) {
  auto L = c.lattice_ptr();
  AvatarPair p{interval_above(c, h), fixed_point_subposet(c, h), {}, "C_{>=H}", "C^H"};
  p.retractions.push_back({"Q -> QH", [L, h](SubgroupId q) { return L->join(q, h); }, Direction::Up});
  return p;
}

AvatarPair centralized_in_fixed(const GPoset& c, SubgroupId h) {
  auto L = c.lattice_ptr();
  const SubgroupId cg = centralizer_of_subgroup(*L, h);
  AvatarPair p{interval_below(c, cg), fixed_point_subposet(c, h), {}, "C_{<=C_G(H)}", "C^H"};
  p.retractions.push_back(
      {"Q -> Q ∩ C_G(H)", [L, cg](SubgroupId q) { return L->meet(q, cg); }, Direction::Down});
  return p;
}

AvatarPair fixed_in_fixed(const GPoset& sub, const GPoset& c, SubgroupId h) {
  return {fixed_point_subposet(sub, h), fixed_point_subposet(c, h), {}, "C'^H", "C^H"};
}

AvatarPair above_in_above(const GPoset& sub, const GPoset& c, SubgroupId h) {
  return {interval_above(sub, h), interval_above(c, h), {}, "C'_{>=H}", "C_{>=H}"};
}

AvatarPair centralized_in_centralized(const GPoset& sub, const GPoset& c, SubgroupId h) {
  const SubgroupId cg = centralizer_of_subgroup(c.lattice(), h);
  return {interval_below(sub, cg), interval_below(c, cg), {}, "C'_{<=C_G(H)}", "C_{<=C_G(H)}"};
}

}  // namespace sclab
