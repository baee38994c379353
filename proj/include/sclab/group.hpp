#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sclab/element_set.hpp"
#include "sclab/permutation.hpp"

namespace sclab {

/// Index of an element in the canonically ordered element list of a group.
using Element = std::uint32_t;

struct GroupLimits {
  std::size_t max_order = 2000;
  std::size_t max_subgroups = 100000;
};

/// A finite permutation group with its full element list materialized.
///
/// Elements are sorted lexicographically by their image arrays, so the
/// identity is always element 0. Multiplication, inversion and element
/// orders are tabulated once at construction.
class PermutationGroup {
 public:
  /// Closes `generators` under multiplication. Throws CapExceeded when the
  /// closure grows past `limits.max_order`.
  static PermutationGroup generate(std::vector<Permutation> generators, std::string name = {},
                                   const GroupLimits& limits = {});

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }

  const std::vector<Permutation>& generators() const { return generators_; }
  /// Element indices of the generators, in input order.
  const std::vector<Element>& generator_elements() const { return generator_elements_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(Element x) const { return elements_[x]; }

  static constexpr Element identity() { return 0; }

  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  /// g x g^-1
  Element conj(Element g, Element x) const { return mul(mul(g, x), inverse_[g]); }
  std::size_t element_order(Element a) const { return element_order_[a]; }
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }

  std::optional<Element> index_of(const Permutation& p) const;

  ElementSet empty_set() const { return ElementSet(order()); }
  ElementSet all_elements() const;

  /// Closure of `seed` under multiplication; `seed` need not contain the identity.
  ElementSet closure(const ElementSet& seed) const;
  ElementSet closure(const std::vector<Element>& generators) const;

  /// FNV-1a over the canonical element table; keys the lattice cache.
  std::uint64_t content_hash() const;

 private:
  PermutationGroup() = default;

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Element> generator_elements_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Element, PermutationHash> index_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> element_order_;
};

/// Largest power of p dividing n.
std::size_t p_part(std::size_t n, int p);
bool is_power_of(std::size_t n, int p);
bool is_prime(int p);
/// Primes dividing n, ascending.
std::vector<int> prime_divisors(std::size_t n);

}  // namespace sclab
