#include "sclab/permutation.hpp"

#include <cctype>
#include <numeric>

#include "sclab/errors.hpp"

namespace sclab {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw Error("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation result = identity(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cyc = *it;
    std::vector<Point> im = identity(degree).images_;
    std::vector<bool> used(degree, false);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (cyc[k] >= degree) throw Error("cycle point out of range");
      if (used[cyc[k]]) throw Error("repeated point inside a cycle");
      used[cyc[k]] = true;
      im[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    result = Permutation(std::move(im)) * result;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(im));
}

Permutation Permutation::extended(std::size_t degree) const {
  std::vector<Point> im = images_;
  for (std::size_t i = im.size(); i < degree; ++i) im.push_back(static_cast<Point>(i));
  return Permutation(std::move(im));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<Point> im(b.images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = a.images_[b.images_[i]];
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    Point x = static_cast<Point>(start);
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

Permutation parse_cycles(std::string_view text, std::size_t degree, std::size_t line,
                         std::size_t column_base) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) { throw ParseError(msg, line, column_base + i); };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) fail("expected cycle notation");
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
        ++i;
      if (i == text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a point index");
      const std::size_t start = i;
      unsigned long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        if (v > 1'000'000) fail("point index too large");
        ++i;
      }
      if (v >= degree) {
        i = start;
        fail("point " + std::to_string(v) + " outside degree " + std::to_string(degree));
      }
      for (Point q : cyc)
        if (q == v) {
          i = start;
          fail("repeated point in cycle");
        }
      cyc.push_back(static_cast<Point>(v));
    }
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace sclab
