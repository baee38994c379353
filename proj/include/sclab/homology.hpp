#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "json.hpp"

#include "sclab/order_complex.hpp"

namespace sclab {

/// Column-major sparse integer matrix; each column sorted by row.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, mpz_class>>> columns;

  std::size_t nonzeros() const;
};

/// Boundary map C_d -> C_{d-1} of the oriented chain complex. For d = 0 this
/// is the augmentation C_0 -> Z, so the resulting homology is reduced.
SparseIntMatrix boundary_matrix(const OrderComplex& c, std::size_t d);

/// Nonzero invariant factors d1 | d2 | ... (all positive).
std::vector<mpz_class> elementary_divisors(const SparseIntMatrix& m);

/// Rank over Z/p.
std::size_t rank_mod_p(const SparseIntMatrix& m, int p);

/// True when a * b == 0 (a: C_{d-1} <- C_d, b: C_d <- C_{d+1}).
bool composes_to_zero(const SparseIntMatrix& a, const SparseIntMatrix& b);

struct HomologyProfile {
  /// Reduced H_{-1} = Z only for the empty complex.
  bool empty = true;
  /// Free rank of reduced H_d, d = 0..dim.
  std::vector<std::size_t> reduced_betti;
  /// Torsion coefficients (> 1) of reduced H_d.
  std::vector<std::vector<mpz_class>> torsion;
  long long euler_characteristic = 0;
  std::vector<std::size_t> simplex_counts;

  /// All reduced groups vanish (the empty complex is not acyclic).
  bool acyclic() const;
  bool connected() const { return !empty && (reduced_betti.empty() || reduced_betti[0] == 0); }

  /// Compares the homology groups only (not the simplex counts).
  bool same_homology(const HomologyProfile& other) const;
};

/// Reduced integral homology via Smith normal form of the boundary maps.
/// Asserts d∘d = 0 and cross-checks each rank modulo a prime (throws Error
/// if either check fails).
HomologyProfile homology(const OrderComplex& c);

nlohmann::json to_json(const HomologyProfile& h);

}  // namespace sclab
