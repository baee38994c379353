#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sclab/poset.hpp"

namespace sclab {

/// Vertex list, strictly increasing.
using Simplex = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultMaxSimplices = 2'000'000;

/// A finite simplicial complex, stored by dimension with every face present.
/// Built either as the nerve of a poset (simplices are strict chains) or
/// from a list of facets.
class OrderComplex {
 public:
  OrderComplex() = default;

  /// All chains x0 < x1 < ... < xk of the poset. Throws SizeCap.
  static OrderComplex of(const GPoset& p, std::size_t max_simplices = kDefaultMaxSimplices);
  /// Downward closure of the given facets on vertices 0..n-1. Throws SizeCap.
  static OrderComplex from_facets(std::size_t n_vertices, std::vector<Simplex> facets,
                                  std::size_t max_simplices = kDefaultMaxSimplices);

  std::size_t vertex_count() const { return labels_.size(); }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const { return by_dim_.empty(); }

  /// Simplices of dimension d in lexicographic order.
  const std::vector<Simplex>& simplices(std::size_t d) const { return by_dim_[d]; }
  std::size_t count(std::size_t d) const { return d < by_dim_.size() ? by_dim_[d].size() : 0; }
  std::size_t total_count() const;
  std::optional<std::size_t> index_of(const Simplex& s) const;

  std::vector<Simplex> maximal_simplices() const;
  /// Alternating simplex count.
  long long euler_characteristic() const;

  std::uint32_t label(std::uint32_t v) const { return labels_[v]; }
  /// One maximal simplex per line, vertices written as their labels.
  std::string to_facet_text() const;

 private:
  void add_closed(std::vector<Simplex> all);

  std::vector<std::uint32_t> labels_;
  std::vector<std::vector<Simplex>> by_dim_;
};

}  // namespace sclab
