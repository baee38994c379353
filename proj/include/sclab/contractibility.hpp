#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sclab/homology.hpp"
#include "sclab/order_complex.hpp"
#include "sclab/poset.hpp"

namespace sclab {

enum class Contractibility { Contractible, NotContractible, Unknown };
std::string_view to_string(Contractibility c);

/// Up:   x <= f(x) >= x0 for every x
/// Down: x >= f(x) <= x0 for every x
enum class Direction { Up, Down };

/// f as a node -> node table on one poset.
using PosetMap = std::vector<std::size_t>;

/// Tabulates a subgroup-valued map. Throws MapNotWellDefined when some
/// image is not a member of the poset.
PosetMap tabulate(const GPoset& p, const std::function<SubgroupId(SubgroupId)>& f);
PosetMap constant_map(const GPoset& p, std::size_t value);

struct CheckResult {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

struct ConicalCertificate {
  PosetMap map;
  std::size_t apex = 0;
  Direction direction = Direction::Up;
  std::string description;
};

/// Checks monotonicity, the pointwise double inequality, and when `equivariance`
/// is given that f commutes with conjugation by its generators.
/// Throws MapNotWellDefined when `f` does not have one image per element.
CheckResult verify_conical_contraction(const GPoset& p, const PosetMap& f, std::size_t apex,
                                       Direction direction,
                                       std::optional<SubgroupId> equivariance = std::nullopt);
CheckResult verify_conical_contraction(const GPoset& p, const ConicalCertificate& c,
                                       std::optional<SubgroupId> equivariance = std::nullopt);

/// A monotone f : X -> X with f >= Id (Up) or f <= Id (Down) whose image lies
/// in the subposet Y. X and Y are then homotopy equivalent (equivariantly when
/// f commutes with the stated group and Y is invariant under it).
CheckResult verify_monotone_retraction(const GPoset& x, const PosetMap& f, const GPoset& y,
                                       Direction direction,
                                       std::optional<SubgroupId> equivariance = std::nullopt);

enum class Comparison { Le, Ge };

/// Id = f_0, f_1, ..., f_k with comparisons[i] relating f_i(x) and f_{i+1}(x).
struct Zigzag {
  std::vector<PosetMap> maps;
  std::vector<Comparison> comparisons;
  std::string description;
};

struct ZigzagResult : CheckResult {
  /// The last map is constant, so the chain contracts the poset.
  bool contracts = false;
};

/// Throws MapNotWellDefined for a map of the wrong shape and ComparisonFails
/// (naming the element) when a pointwise comparison does not hold.
ZigzagResult verify_zigzag(const GPoset& p, const Zigzag& z,
                           std::optional<SubgroupId> equivariance = std::nullopt);

struct CollapseStep {
  Simplex face;
  Simplex coface;
};

/// Replays elementary collapses; true iff each is legal and a single vertex remains.
bool replay_collapses(const OrderComplex& c, const std::vector<CollapseStep>& steps);

enum class Evidence {
  Empty,
  Cone,
  Conical,
  Collapse,
  SimplyConnectedAcyclic,
  Homology,
  Disconnected,
  FixedPoints,
  None,
};
std::string_view to_string(Evidence e);

struct Verdict {
  Contractibility status = Contractibility::Unknown;
  Evidence evidence = Evidence::None;
  std::string reason;
  std::optional<ConicalCertificate> conical;
  std::vector<CollapseStep> collapses;
  std::optional<HomologyProfile> homology;

  bool contractible() const { return status == Contractibility::Contractible; }
};

struct ContractibilityOptions {
  std::size_t max_simplices = kDefaultMaxSimplices;
  bool conical_search = true;
  bool collapses = true;
  std::size_t tietze_iterations = 20000;
  std::size_t tietze_relator_length = 400;
};

/// Empty -> not contractible; cone point; conical search over join/meet maps;
/// greedy collapses; homology and connectivity; acyclic and simply connected.
/// Anything else is Unknown.
Verdict contractibility_verdict(const GPoset& p, const ContractibilityOptions& opts = {});
Verdict contractibility_verdict(const OrderComplex& c, const ContractibilityOptions& opts = {});

/// First apex x0 for which x -> join(x, x0) (Up) or x -> meet(x, x0) (Down)
/// stays in the poset. Only apexes normalized by `fixed_by` are tried when given.
std::optional<ConicalCertificate> find_conical_contraction(
    const GPoset& p, std::optional<SubgroupId> fixed_by = std::nullopt);

/// K-contractibility: a K-equivariant conical contraction, or else
/// contractibility of the fixed points of every subgroup of K.
Verdict equivariant_contractibility(const GPoset& p, SubgroupId k,
                                    const ContractibilityOptions& opts = {});

/// Re-checks the certificate carried by a verdict.
bool reverify(const GPoset& p, const Verdict& v, const ContractibilityOptions& opts = {});

/// Edge-path group of the 2-skeleton reduced to the trivial group by bounded
/// Tietze moves. False means "not shown", never "nontrivial".
bool fundamental_group_trivial(const OrderComplex& c, const ContractibilityOptions& opts = {});

/// Path components of the comparability graph.
std::size_t component_count(const GPoset& p);

}  // namespace sclab
