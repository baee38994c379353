#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "sclab/lattice.hpp"

namespace sclab {

inline constexpr int kLatticeCacheVersion = 1;

/// File name used for a group's cached lattice: lattice-v<version>-<hash>.json
std::string lattice_cache_name(const PermutationGroup& G);

void save_lattice(const SubgroupLattice& L, const std::filesystem::path& dir);

/// Returns nullopt when no usable cache entry exists (missing, stale
/// version, hash mismatch, or malformed content).
std::optional<SubgroupLattice> load_cached_lattice(std::shared_ptr<const PermutationGroup> G,
                                                   const std::filesystem::path& dir);

/// Cache-aware enumeration. An empty `dir` disables caching.
SubgroupLattice load_or_enumerate(std::shared_ptr<const PermutationGroup> G,
                                  const std::filesystem::path& dir, const GroupLimits& limits = {});

}  // namespace sclab
