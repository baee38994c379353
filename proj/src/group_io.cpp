#include "sclab/group_io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sclab/errors.hpp"

namespace sclab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_size(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw UnknownBuiltin(std::string(what));
  return v;
}

Permutation cycle_of(std::size_t degree, std::size_t from, std::size_t to) {
  std::vector<Point> c;
  for (std::size_t i = from; i < to; ++i) c.push_back(static_cast<Point>(i));
  return Permutation::from_cycles(degree, {c});
}

std::vector<Permutation> symmetric_gens(std::size_t n) {
  if (n <= 1) return {Permutation::identity(std::max<std::size_t>(n, 1))};
  return {cycle_of(n, 0, 2), cycle_of(n, 0, n)};
}

std::vector<Permutation> alternating_gens(std::size_t n) {
  if (n < 3) return {Permutation::identity(std::max<std::size_t>(n, 1))};
  if (n == 3) return {cycle_of(3, 0, 3)};
  Permutation three = cycle_of(n, 0, 3);
  Permutation long_cycle = (n % 2 == 1) ? cycle_of(n, 0, n) : cycle_of(n, 1, n);
  return {three, long_cycle};
}

std::vector<Permutation> dihedral_gens(std::size_t order) {
  if (order < 4 || order % 2 != 0)
    throw UnknownBuiltin("Dn:" + std::to_string(order) + " (order must be even and >= 4)");
  const std::size_t m = order / 2;
  if (m == 2) {
    // Klein four group as D4.
    return {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
            Permutation::from_cycles(4, {{0, 2}, {1, 3}})};
  }
  std::vector<Point> refl(m);
  // i -> 2 - i (mod m); for m = 4 this is (0 2).
  for (std::size_t i = 0; i < m; ++i) refl[i] = static_cast<Point>((m + 2 - i) % m);
  return {cycle_of(m, 0, m), Permutation(refl)};
}

// SL(2,3) acting on the eight nonzero vectors of F_3^2.
std::vector<Permutation> sl23_gens() {
  std::vector<std::array<int, 2>> vecs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) vecs.push_back({a, b});
  auto index = [&](std::array<int, 2> v) {
    for (std::size_t i = 0; i < vecs.size(); ++i)
      if (vecs[i] == v) return static_cast<Point>(i);
    throw Error("vector not found");
  };
  auto act = [&](std::array<std::array<int, 2>, 2> m) {
    std::vector<Point> im;
    for (const auto& v : vecs)
      im.push_back(index({(m[0][0] * v[0] + m[0][1] * v[1]) % 3,
                          (m[1][0] * v[0] + m[1][1] * v[1]) % 3}));
    return Permutation(im);
  };
  return {act({{{1, 1}, {0, 1}}}), act({{{1, 0}, {1, 1}}})};
}

}  // namespace

PermutationGroup parse_group(std::string_view text, std::string name, const GroupLimits& limits) {
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    std::string_view line = trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t col0 = lead + 1;
    if (line.rfind("degree", 0) == 0 &&
        (line.size() == 6 || std::isspace(static_cast<unsigned char>(line[6])))) {
      if (have_degree) throw ParseError("duplicate degree line", line_no, col0);
      std::string_view num = trim(line.substr(6));
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
      if (ec != std::errc{} || ptr != num.data() + num.size() || v == 0)
        throw ParseError("expected a positive degree", line_no, col0 + 7);
      degree = v;
      have_degree = true;
    } else if (line.rfind("gen", 0) == 0 &&
               (line.size() == 3 || std::isspace(static_cast<unsigned char>(line[3])))) {
      if (!have_degree) throw ParseError("'gen' before 'degree'", line_no, col0);
      std::string_view body = line.substr(3);
      gens.push_back(parse_cycles(body, degree, line_no, col0 + 3));
    } else {
      throw ParseError("expected 'degree' or 'gen'", line_no, col0);
    }
    if (end == text.size()) break;
  }
  if (!have_degree) throw ParseError("missing 'degree' line", 1, 1);
  if (gens.empty()) gens.push_back(Permutation::identity(degree));
  return PermutationGroup::generate(std::move(gens), std::move(name), limits);
}

std::vector<std::string> builtin_names() {
  return {"D8",     "Q8",     "S3",      "S4",      "A4",          "A5",
          "S5",     "D12",    "SL23",    "Zn:<n>",  "Sn:<n>",      "An:<n>",
          "Dn:<order>"};
}

PermutationGroup builtin_group(std::string_view name, const GroupLimits& limits) {
  const std::string label(name);
  auto make = [&](std::vector<Permutation> gens) {
    return PermutationGroup::generate(std::move(gens), label, limits);
  };
  if (name == "D8") return make(dihedral_gens(8));
  if (name == "D12") return make(dihedral_gens(12));
  if (name == "Q8")
    return make({Permutation::from_cycles(8, {{0, 1, 3, 6}, {2, 5, 7, 4}}),
                 Permutation::from_cycles(8, {{0, 2, 3, 7}, {1, 4, 6, 5}})});
  if (name == "S3") return make(symmetric_gens(3));
  if (name == "S4") return make(symmetric_gens(4));
  if (name == "S5") return make(symmetric_gens(5));
  if (name == "A4") return make(alternating_gens(4));
  if (name == "A5") return make(alternating_gens(5));
  if (name == "SL23") return make(sl23_gens());
  const auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view family = name.substr(0, colon);
    const std::size_t n = parse_size(name.substr(colon + 1), label);
    if (n == 0 || n > 1'000'000) throw UnknownBuiltin(label);
    if (family == "Zn") {
      if (n == 1) return make({Permutation::identity(1)});
      return make({cycle_of(n, 0, n)});
    }
    if (family == "Sn") return make(symmetric_gens(n));
    if (family == "An") return make(alternating_gens(n));
    if (family == "Dn") return make(dihedral_gens(n));
  }
  throw UnknownBuiltin(label);
}

PermutationGroup load_group(const std::string& source, const GroupLimits& limits) {
  constexpr std::string_view prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return builtin_group(source.substr(prefix.size()), limits);
  std::ifstream in(source);
  if (!in) throw IOError("cannot open group file '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string stem = source;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
  if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
  return parse_group(buf.str(), stem, limits);
}

std::string format_group(const PermutationGroup& G) {
  std::string out = "degree " + std::to_string(G.degree()) + "\n";
  for (const auto& g : G.generators()) out += "gen " + g.to_cycle_string() + "\n";
  return out;
}

}  // namespace sclab
