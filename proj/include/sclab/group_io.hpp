#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sclab/group.hpp"

namespace sclab {

/// Parses the group text format:
///
///     degree 4
///     # comment
///     gen (0 1 2 3)
///     gen (0 2)
PermutationGroup parse_group(std::string_view text, std::string name = {},
                             const GroupLimits& limits = {});

/// Resolves `builtin:NAME` or reads a group file from disk.
PermutationGroup load_group(const std::string& source, const GroupLimits& limits = {});

/// Names accepted after `builtin:`. Parametrized families are listed with a
/// placeholder, e.g. "Zn:<n>".
std::vector<std::string> builtin_names();
PermutationGroup builtin_group(std::string_view name, const GroupLimits& limits = {});

/// Text-format rendering (round-trips through parse_group).
std::string format_group(const PermutationGroup& G);

}  // namespace sclab
