#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sclab {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1} stored by its images.
///
/// Products compose right to left: (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint or overlapping cycles, applied right to left.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation extended(std::size_t degree) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// Disjoint cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

/// Parses cycle notation such as "(0 1 2)(3 4)" or "()" on `degree` points.
/// Throws ParseError with a column relative to `text`, offset by `column_base`.
Permutation parse_cycles(std::string_view text, std::size_t degree, std::size_t line = 1,
                         std::size_t column_base = 1);

}  // namespace sclab
