#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sclab/collections.hpp"
#include "sclab/group_io.hpp"
#include "sclab/lattice.hpp"

namespace testkit {

struct SuiteGroup {
  std::string label;
  std::string source;
};

// Groups the acceptance criteria quantify over.
inline const std::vector<SuiteGroup>& acceptance_suite() {
  static const std::vector<SuiteGroup> groups = {
      {"D8", "builtin:D8"},   {"Q8", "builtin:Q8"},     {"Z2", "builtin:Zn:2"},
      {"Z3", "builtin:Zn:3"}, {"Z5", "builtin:Zn:5"},   {"S3", "builtin:S3"},
      {"S4", "builtin:S4"},   {"A4", "builtin:A4"},     {"D12", "builtin:D12"},
      {"SL23", "builtin:SL23"}, {"A5", "builtin:A5"}, {"S5", "builtin:S5"},
  };
  return groups;
}

inline std::shared_ptr<const sclab::SubgroupLattice> lattice_of(const std::string& source) {
  auto G = std::make_shared<const sclab::PermutationGroup>(sclab::load_group(source));
  return std::make_shared<const sclab::SubgroupLattice>(sclab::SubgroupLattice::enumerate(G));
}

}  // namespace testkit
