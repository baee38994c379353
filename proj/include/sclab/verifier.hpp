#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sclab/collections.hpp"
#include "sclab/contractibility.hpp"
#include "sclab/equivalence.hpp"
#include "sclab/group_io.hpp"

namespace sclab {

enum class Suite { Table31, Table44, Counterexamples, Inclusions, Conditions, All };
std::string_view to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

enum class ReportFormat { Json, Markdown };

struct VerificationPlan {
  std::string group_source;  // path or builtin:NAME
  int prime = 0;
  Suite suite = Suite::All;
  GroupLimits limits;
  std::size_t max_simplices = kDefaultMaxSimplices;
  std::string cache_dir;  // empty: no cache
  bool strict = false;
  unsigned jobs = 0;  // 0: one per hardware thread
};

enum class LineStyle { Solid, Dashed, Dotted };
std::string_view to_string(LineStyle s);

enum class EdgeStatus { Certified, HomologyConsistent, Skipped, Mismatch, Inconclusive };
std::string_view to_string(EdgeStatus s);

// One proof step of an edge: an inclusion criterion or a closure property
// checked element by element.
struct StepCheck {
  std::string id;
  std::string claim;
  std::optional<Condition> hypothesis;
  CheckStatus status = CheckStatus::Pass;
  std::size_t elements_checked = 0;
  std::size_t explicit_certified = 0;
  std::vector<std::string> failures;  // capped
};

// A documented fixed-point disagreement on a dotted edge.
struct CounterexampleCheck {
  std::string name;
  std::string expected;
  std::string observed;
  bool reproduced = false;
};

struct EdgeResult {
  std::string table;   // table31 | table44
  bool vertical = false;
  std::string line;    // row name (EO, nerve, EA) or column collection
  std::string from, to;
  LineStyle style = LineStyle::Solid;
  std::vector<Condition> hypotheses;
  EdgeStatus status = EdgeStatus::Certified;
  std::string evidence;
  std::vector<StepCheck> steps;
  std::vector<ScanEntry> scan;
  std::optional<std::string> sylow_spot_check;
  std::vector<CounterexampleCheck> counterexamples;
  std::vector<ConditionReport> failing_conditions;

  std::string name() const;
};

struct InclusionCheck {
  std::string name;
  bool equality = false;
  bool applicable = true;
  bool holds = true;
  std::vector<SubgroupId> violations;
};

struct HomologyCheck {
  std::string name;
  std::vector<CollectionKind> kinds;
  std::vector<HomologyProfile> profiles;
  bool required = true;
  bool agree = true;
  bool complete = true;  // false when a nerve exceeded the simplex bound
};

struct GroupSummary {
  std::string name;
  std::size_t order = 0;
  std::size_t degree = 0;
  std::vector<std::string> generators;
  std::size_t subgroup_count = 0;
  std::string content_hash;
};

struct Report {
  static constexpr int kSchemaVersion = 1;

  GroupSummary group;
  int prime = 0;
  Suite suite = Suite::All;
  std::vector<Collection> collections;
  std::vector<ConditionReport> conditions;
  std::vector<EdgeResult> edges;
  std::vector<CounterexampleCheck> counterexamples;
  std::vector<InclusionCheck> inclusions;
  std::vector<HomologyCheck> homology;
  std::vector<std::string> annotations;
  // Lattice kept for rendering subgroup generators; not serialized itself.
  std::shared_ptr<const SubgroupLattice> lattice;

  bool has_mismatch() const;
  bool has_inconclusive() const;
};

/// Loads the group (and lattice, through the cache when set), then runs the suite.
/// Throws the loader's errors, CapExceeded and PrimeDoesNotDivide.
Report run(const VerificationPlan& plan);

/// Suite runner on an already enumerated lattice.
Report run_suite(std::shared_ptr<const SubgroupLattice> lattice, int p, Suite suite,
                 const ContractibilityOptions& opts = {}, unsigned jobs = 1);

Report run_inclusions(const VerificationPlan& plan);

/// 0 no mismatch, 1 mismatch, 2 inconclusive under strict.
int exit_code(const Report& r, bool strict);

std::string emit_report(const Report& r, ReportFormat format);
/// Throws IOError.
void write_report(const Report& r, ReportFormat format, const std::string& path);

// Exit codes for operational failures.
namespace exit_codes {
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kParse = 10;
inline constexpr int kUnknownBuiltin = 11;
inline constexpr int kCap = 12;
inline constexpr int kPrime = 13;
inline constexpr int kIO = 14;
inline constexpr int kUsage = 15;
inline constexpr int kInternal = 16;
}  // namespace exit_codes

/// Subgroup rendered by its generators, e.g. "<(0 1)(2 3), (0 2)>".
std::string describe_subgroup(const SubgroupLattice& L, SubgroupId h);

/// D8 as recognized by the verifier: order 8 with ten subgroups.
bool looks_like_d8(const SubgroupLattice& L);

}  // namespace sclab
