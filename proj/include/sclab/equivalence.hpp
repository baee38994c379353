#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sclab/contractibility.hpp"

namespace sclab {

// Criteria for an inclusion sub ⊆ ambient of collections to be an
// equivariant homotopy equivalence, checked element by element.
enum class InclusionMode {
  LowerFibers,            // sub_{<=y} is N_G(y)-contractible for every y in ambient
  UpperLinks,             // ambient_{>P} contractible for P in ambient \ sub
  LowerLinks,             // ambient_{<P} contractible for P in ambient \ sub
  UpperLinksEquivariant,  // ambient_{>P} N_G(P)-contractible for P in ambient \ sub
};
std::string_view to_string(InclusionMode m);

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string_view to_string(CheckStatus s);

/// A certificate supplied by the caller for one local poset.
struct ExplicitCertificate {
  std::optional<ConicalCertificate> conical;
  std::optional<Zigzag> zigzag;
  std::string description;
};

/// Given the element y and the local poset to contract, returns the
/// certificate to try first (or nullopt to rely on the automatic search).
using CertificateProvider =
    std::function<std::optional<ExplicitCertificate>(SubgroupId y, const GPoset& local)>;

struct ElementCheck {
  SubgroupId element;
  std::size_t local_size = 0;
  Contractibility status = Contractibility::Unknown;
  /// The explicit certificate was supplied and verified.
  bool explicit_certified = false;
  std::string evidence;
};

struct InclusionReport {
  InclusionMode mode = InclusionMode::LowerFibers;
  CheckStatus status = CheckStatus::Pass;
  std::vector<ElementCheck> checks;
  /// First element that failed or stayed undecided.
  std::optional<SubgroupId> witness;
  /// Every check was settled by a verified explicit certificate.
  bool all_explicit = true;
};

/// Throws NotASubposet unless sub ⊆ ambient over the same lattice. With
/// `equivariant` false the lower fibers only need to be contractible.
InclusionReport verify_inclusion_equivalence(const GPoset& sub, const GPoset& ambient,
                                             InclusionMode mode,
                                             const CertificateProvider& provider = {},
                                             const ContractibilityOptions& opts = {},
                                             bool equivariant = true);

/// Checks one explicit certificate against a local poset. Map and comparison
/// errors are reported as failures, not thrown.
CheckResult check_explicit(const GPoset& local, const ExplicitCertificate& cert,
                           std::optional<SubgroupId> equivariance);

enum class ScanStatus { Certified, HomologyConsistent, Mismatch };
std::string_view to_string(ScanStatus s);

struct Retraction {
  std::string name;
  std::function<SubgroupId(SubgroupId)> map;
  Direction direction = Direction::Up;
};

/// Two fixed-point avatars with sub ⊆ ambient, plus retractions to try first.
struct AvatarPair {
  GPoset sub;
  GPoset ambient;
  std::vector<Retraction> retractions;
  std::string sub_name;
  std::string ambient_name;
};

struct ScanEntry {
  SubgroupId h;
  std::size_t sub_size = 0;
  std::size_t ambient_size = 0;
  ScanStatus status = ScanStatus::HomologyConsistent;
  std::string evidence;
  std::optional<HomologyProfile> sub_homology;
  std::optional<HomologyProfile> ambient_homology;
};

/// Evidence tiers for sub ≃ ambient: equal or both empty; a verified
/// retraction (given ones, then join with H and meet with C_G(H)); all lower
/// or all upper fibers contractible; both contractible. Otherwise compares
/// homology.
ScanEntry compare_avatars(const AvatarPair& pair, SubgroupId h,
                          const ContractibilityOptions& opts = {});

std::vector<ScanEntry> fixed_point_equivalence_scan(
    const std::vector<SubgroupId>& hs, const std::function<AvatarPair(SubgroupId)>& avatars,
    const ContractibilityOptions& opts = {});

/// C_{>=H} ⊆ C^H, with Q -> QH as the retraction.
AvatarPair above_in_fixed(const GPoset& c, SubgroupId h);
/// C_{<=C_G(H)} ⊆ C^H, with Q -> Q ∩ C_G(H) as the retraction.
AvatarPair centralized_in_fixed(const GPoset& c, SubgroupId h);
/// C'^H ⊆ C^H
AvatarPair fixed_in_fixed(const GPoset& sub, const GPoset& c, SubgroupId h);
/// C'_{>=H} ⊆ C_{>=H}
AvatarPair above_in_above(const GPoset& sub, const GPoset& c, SubgroupId h);
/// C'_{<=C_G(H)} ⊆ C_{<=C_G(H)}
AvatarPair centralized_in_centralized(const GPoset& sub, const GPoset& c, SubgroupId h);

}  // namespace sclab
