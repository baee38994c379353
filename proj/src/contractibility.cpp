#include "sclab/contractibility.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "sclab/errors.hpp"

namespace sclab {

namespace {

std::string node_name(const GPoset& p, std::size_t i) {
  return (p.has_lattice() ? "subgroup #" : "node ") + std::to_string(p.label(i));
}

void check_shape(const GPoset& p, const PosetMap& f) {
  if (f.size() != p.size())
    throw MapNotWellDefined("map has " + std::to_string(f.size()) + " images for " +
                            std::to_string(p.size()) + " elements");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] >= p.size())
      throw MapNotWellDefined("image of " + node_name(p, i) + " lies outside the poset");
}

CheckResult check_monotone(const GPoset& p, const PosetMap& f) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.less(a, b) && !p.leq(f[a], f[b]))
        return CheckResult::fail("not monotone at " + node_name(p, a) + " < " + node_name(p, b));
  return CheckResult::pass();
}

CheckResult check_equivariant(const GPoset& p, const PosetMap& f, std::optional<SubgroupId> k) {
  if (!k || !p.has_lattice()) return CheckResult::pass();
  for (Element g : p.lattice().at(*k).generators)
    for (std::size_t x = 0; x < p.size(); ++x) {
      const auto gx = p.act(g, x);
      if (!gx) return CheckResult::fail("poset is not invariant under the acting group");
      if (p.act(g, f[x]) != f[*gx])
        return CheckResult::fail("map does not commute with conjugation at " + node_name(p, x));
    }
  return CheckResult::pass();
}

// Union-find over poset nodes joined by comparability.
std::size_t components(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& adj) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = n;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (adj(a, b)) {
        auto ra = find(a), rb = find(b);
        if (ra != rb) {
          parent[ra] = rb;
          --count;
        }
      }
  return count;
}

// Simplices of all dimensions with global ids and coface lists.
struct FaceGraph {
  std::vector<std::size_t> offset;
  std::vector<std::vector<std::size_t>> faces;    // codim-1 faces
  std::vector<std::vector<std::size_t>> cofaces;  // dim+1 cofaces
  std::size_t total = 0;

  explicit FaceGraph(const OrderComplex& c) {
    const std::size_t dims = c.empty() ? 0 : static_cast<std::size_t>(c.dimension()) + 1;
    offset.resize(dims + 1, 0);
    for (std::size_t d = 0; d < dims; ++d) offset[d + 1] = offset[d] + c.count(d);
    total = offset[dims];
    faces.resize(total);
    cofaces.resize(total);
    for (std::size_t d = 1; d < dims; ++d)
      for (std::size_t j = 0; j < c.count(d); ++j) {
        const Simplex& s = c.simplices(d)[j];
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
          Simplex f;
          for (std::size_t i = 0; i < s.size(); ++i)
            if (i != skip) f.push_back(s[i]);
          const std::size_t fid = offset[d - 1] + *c.index_of(f);
          faces[offset[d] + j].push_back(fid);
          cofaces[fid].push_back(offset[d] + j);
        }
      }
  }

  std::size_t dim_of(std::size_t id) const {
    return static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), id) -
                                    offset.begin()) -
           1;
  }
};

const Simplex& simplex_of(const OrderComplex& c, const FaceGraph& g, std::size_t id) {
  const std::size_t d = g.dim_of(id);
  return c.simplices(d)[id - g.offset[d]];
}

std::optional<std::vector<CollapseStep>> greedy_collapse(const OrderComplex& c) {
  FaceGraph g(c);
  std::vector<char> alive(g.total, 1);
  std::vector<std::size_t> live_cofaces(g.total);
  for (std::size_t i = 0; i < g.total; ++i) live_cofaces[i] = g.cofaces[i].size();
  std::size_t remaining = g.total;
  std::vector<CollapseStep> steps;

  std::deque<std::size_t> work;
  for (std::size_t i = 0; i < g.total; ++i)
    if (live_cofaces[i] == 1) work.push_back(i);
  while (!work.empty()) {
    const std::size_t s = work.front();
    work.pop_front();
    if (!alive[s] || live_cofaces[s] != 1) continue;
    std::size_t t = g.total;
    for (auto cf : g.cofaces[s])
      if (alive[cf]) t = cf;
    if (t == g.total || live_cofaces[t] != 0) continue;
    steps.push_back({simplex_of(c, g, s), simplex_of(c, g, t)});
    alive[s] = alive[t] = 0;
    remaining -= 2;
    for (auto f : g.faces[t])
      if (alive[f] && --live_cofaces[f] == 1) work.push_back(f);
    for (auto f : g.faces[s])
      if (alive[f] && --live_cofaces[f] == 1) work.push_back(f);
    // faces of s may now be free, and cofaces of t's faces may be maximal now
    for (auto f : g.faces[t])
      if (alive[f])
        for (auto ff : g.faces[f])
          if (alive[ff] && live_cofaces[ff] == 1) work.push_back(ff);
    for (auto f : g.faces[s])
      if (alive[f] && live_cofaces[f] == 0)
        for (auto ff : g.faces[f])
          if (alive[ff] && live_cofaces[ff] == 1) work.push_back(ff);
  }
  if (remaining == 1) return steps;
  return std::nullopt;
}

// Free reduction of a word in generators +-(k+1).
void reduce(std::vector<long>& w) {
  std::vector<long> out;
  for (long x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  // cyclic reduction
  std::size_t a = 0, b = out.size();
  while (b - a >= 2 && out[a] == -out[b - 1]) {
    ++a;
    --b;
  }
  w.assign(out.begin() + static_cast<long>(a), out.begin() + static_cast<long>(b));
}

}  // namespace

std::string_view to_string(Contractibility c) {
  switch (c) {
    case Contractibility::Contractible:
      return "CONTRACTIBLE";
    case Contractibility::NotContractible:
      return "NOT_CONTRACTIBLE";
    case Contractibility::Unknown:
      return "UNKNOWN";
  }
  return "?";
}

std::string_view to_string(Evidence e) {
  switch (e) {
    case Evidence::Empty:
      return "empty";
    case Evidence::Cone:
      return "cone";
    case Evidence::Conical:
      return "conical-contraction";
    case Evidence::Collapse:
      return "collapse-sequence";
    case Evidence::SimplyConnectedAcyclic:
      return "acyclic-and-simply-connected";
    case Evidence::Homology:
      return "nontrivial-homology";
    case Evidence::Disconnected:
      return "disconnected";
    case Evidence::FixedPoints:
      return "fixed-point-sets";
    case Evidence::None:
      return "none";
  }
  return "?";
}

PosetMap tabulate(const GPoset& p, const std::function<SubgroupId(SubgroupId)>& f) {
  if (!p.has_lattice()) throw Error("subgroup maps need a subgroup poset");
  PosetMap out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const SubgroupId y = f(p.subgroup(i));
    const auto idx = p.index_of(y);
    if (!idx)
      throw MapNotWellDefined("image of subgroup #" + std::to_string(p.subgroup(i).value) +
                              " is subgroup #" + std::to_string(y.value) +
                              ", which is not in the poset");
    out[i] = *idx;
  }
  return out;
}

PosetMap constant_map(const GPoset& p, std::size_t value) { return PosetMap(p.size(), value); }

CheckResult verify_conical_contraction(const GPoset& p, const PosetMap& f, std::size_t apex,
                                       Direction direction, std::optional<SubgroupId> equivariance) {
  check_shape(p, f);
  if (apex >= p.size()) throw MapNotWellDefined("apex lies outside the poset");
  if (auto r = check_monotone(p, f); !r) return r;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const bool ok = direction == Direction::Up ? p.leq(x, f[x]) && p.leq(apex, f[x])
                                               : p.leq(f[x], x) && p.leq(f[x], apex);
    if (!ok) return CheckResult::fail("double inequality fails at " + node_name(p, x));
  }
  return check_equivariant(p, f, equivariance);
}

CheckResult verify_conical_contraction(const GPoset& p, const ConicalCertificate& c,
                                       std::optional<SubgroupId> equivariance) {
  return verify_conical_contraction(p, c.map, c.apex, c.direction, equivariance);
}

CheckResult verify_monotone_retraction(const GPoset& x, const PosetMap& f, const GPoset& y,
                                       Direction direction, std::optional<SubgroupId> equivariance) {
  if (!x.has_lattice() || !y.is_subposet_of(x))
    throw NotASubposet("retraction target is not a subposet of the source");
  check_shape(x, f);
  if (auto r = check_monotone(x, f); !r) return r;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool ok = direction == Direction::Up ? x.leq(i, f[i]) : x.leq(f[i], i);
    if (!ok) return CheckResult::fail("map is not comparable to the identity at " + node_name(x, i));
    if (!y.contains(x.subgroup(f[i])))
      return CheckResult::fail("image of " + node_name(x, i) + " leaves the target subposet");
  }
  if (equivariance && !y.invariant_under(*equivariance))
    return CheckResult::fail("target subposet is not invariant");
  return check_equivariant(x, f, equivariance);
}

ZigzagResult verify_zigzag(const GPoset& p, const Zigzag& z, std::optional<SubgroupId> equivariance) {
  ZigzagResult out;
  if (z.comparisons.size() != z.maps.size())
    throw MapNotWellDefined("zigzag needs one comparison per map");
  for (const auto& f : z.maps) {
    check_shape(p, f);
    if (auto r = check_monotone(p, f); !r) {
      out.ok = false;
      out.reason = r.reason;
      return out;
    }
    if (auto r = check_equivariant(p, f, equivariance); !r) {
      out.ok = false;
      out.reason = r.reason;
      return out;
    }
  }
  for (std::size_t k = 0; k < z.maps.size(); ++k) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      const std::size_t from = k == 0 ? x : z.maps[k - 1][x];
      const std::size_t to = z.maps[k][x];
      const bool ok = z.comparisons[k] == Comparison::Le ? p.leq(from, to) : p.leq(to, from);
      if (!ok)
        throw ComparisonFails("comparison " + std::to_string(k) + " fails at " + node_name(p, x));
    }
  }
  if (z.maps.empty()) {
    out.contracts = p.size() == 1;
  } else {
    const auto& last = z.maps.back();
    out.contracts = !p.empty() && std::all_of(last.begin(), last.end(),
                                              [&](std::size_t v) { return v == last.front(); });
  }
  if (!out.contracts && !p.empty() && !z.maps.empty()) out.reason = "final map is not constant";
  return out;
}

bool replay_collapses(const OrderComplex& c, const std::vector<CollapseStep>& steps) {
  FaceGraph g(c);
  std::vector<char> alive(g.total, 1);
  std::vector<std::size_t> live_cofaces(g.total);
  for (std::size_t i = 0; i < g.total; ++i) live_cofaces[i] = g.cofaces[i].size();
  std::size_t remaining = g.total;
  for (const auto& st : steps) {
    if (st.coface.size() != st.face.size() + 1) return false;
    if (!std::includes(st.coface.begin(), st.coface.end(), st.face.begin(), st.face.end()))
      return false;
    const auto fi = c.index_of(st.face), ti = c.index_of(st.coface);
    if (!fi || !ti) return false;
    const std::size_t s = g.offset[st.face.size() - 1] + *fi;
    const std::size_t t = g.offset[st.coface.size() - 1] + *ti;
    if (!alive[s] || !alive[t] || live_cofaces[s] != 1 || live_cofaces[t] != 0) return false;
    alive[s] = alive[t] = 0;
    remaining -= 2;
    for (auto f : g.faces[t])
      if (alive[f]) --live_cofaces[f];
    for (auto f : g.faces[s])
      if (alive[f]) --live_cofaces[f];
  }
  return remaining == 1;
}

bool fundamental_group_trivial(const OrderComplex& c, const ContractibilityOptions& opts) {
  if (c.empty()) return false;
  const std::size_t nv = c.count(0);
  // spanning forest of the 1-skeleton by BFS; tree edges are trivial generators
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj(nv);
  for (std::size_t e = 0; e < c.count(1); ++e) {
    const auto& s = c.simplices(1)[e];
    adj[s[0]].emplace_back(s[1], e);
    adj[s[1]].emplace_back(s[0], e);
  }
  std::vector<char> seen(nv, 0), tree(c.count(1), 0);
  std::deque<std::uint32_t> q{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    auto v = q.front();
    q.pop_front();
    for (auto [w, e] : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        tree[e] = 1;
        ++reached;
        q.push_back(w);
      }
  }
  if (reached != nv) return false;

  std::vector<long> gen_of(c.count(1), 0);
  long next = 0;
  for (std::size_t e = 0; e < c.count(1); ++e)
    if (!tree[e]) gen_of[e] = ++next;
  if (next == 0) return true;

  auto edge = [&](std::uint32_t a, std::uint32_t b) {
    return gen_of[*c.index_of(Simplex{a, b})];
  };
  std::vector<std::vector<long>> rels;
  for (std::size_t t = 0; t < c.count(2); ++t) {
    const auto& s = c.simplices(2)[t];
    std::vector<long> w;
    for (long x : {edge(s[0], s[1]), edge(s[1], s[2]), -edge(s[0], s[2])})
      if (x != 0) w.push_back(x);
    reduce(w);
    if (!w.empty()) rels.push_back(std::move(w));
  }

  std::vector<char> live(static_cast<std::size_t>(next) + 1, 1);
  live[0] = 0;
  std::size_t live_count = static_cast<std::size_t>(next);
  for (std::size_t iter = 0; iter < opts.tietze_iterations && live_count > 0; ++iter) {
    // pick the shortest relator in which some generator occurs exactly once
    std::size_t best_r = rels.size();
    long best_g = 0;
    for (std::size_t r = 0; r < rels.size(); ++r) {
      if (best_r != rels.size() && rels[r].size() >= rels[best_r].size()) continue;
      std::map<long, int> occ;
      for (long x : rels[r]) ++occ[std::labs(x)];
      for (auto [g, k] : occ)
        if (k == 1) {
          best_r = r;
          best_g = g;
          break;
        }
    }
    if (best_r == rels.size()) return false;
    // rel = u x^e v  =>  x^e = u^-1 v^-1  (cyclically: x^e = (v u)^-1)
    std::vector<long> rel = rels[best_r];
    const auto pos = static_cast<std::size_t>(
        std::find_if(rel.begin(), rel.end(), [&](long x) { return std::labs(x) == best_g; }) -
        rel.begin());
    const long sign = rel[pos] > 0 ? 1 : -1;
    std::vector<long> vu(rel.begin() + static_cast<long>(pos) + 1, rel.end());
    vu.insert(vu.end(), rel.begin(), rel.begin() + static_cast<long>(pos));
    std::vector<long> value;  // x^sign
    for (auto it = vu.rbegin(); it != vu.rend(); ++it) value.push_back(-*it);
    std::vector<long> x_pos = value;  // x itself
    if (sign < 0) {
      x_pos.clear();
      for (auto it = value.rbegin(); it != value.rend(); ++it) x_pos.push_back(-*it);
    }
    std::vector<long> x_neg;
    for (auto it = x_pos.rbegin(); it != x_pos.rend(); ++it) x_neg.push_back(-*it);

    rels.erase(rels.begin() + static_cast<long>(best_r));
    std::vector<std::vector<long>> next_rels;
    for (auto& w : rels) {
      std::vector<long> nw;
      for (long y : w) {
        if (y == best_g)
          nw.insert(nw.end(), x_pos.begin(), x_pos.end());
        else if (y == -best_g)
          nw.insert(nw.end(), x_neg.begin(), x_neg.end());
        else
          nw.push_back(y);
      }
      reduce(nw);
      if (nw.size() > opts.tietze_relator_length) return false;
      if (!nw.empty()) next_rels.push_back(std::move(nw));
    }
    rels = std::move(next_rels);
    live[static_cast<std::size_t>(best_g)] = 0;
    --live_count;
  }
  return live_count == 0;
}

std::size_t component_count(const GPoset& p) {
  return components(p.size(), [&](std::size_t a, std::size_t b) { return p.leq(a, b) || p.leq(b, a); });
}

std::optional<ConicalCertificate> find_conical_contraction(const GPoset& p,
                                                           std::optional<SubgroupId> fixed_by) {
  if (!p.has_lattice() || p.empty()) return std::nullopt;
  const SubgroupLattice& L = p.lattice();
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (fixed_by) {
      const auto& gens = L.at(*fixed_by).generators;
      const bool fixed = std::all_of(gens.begin(), gens.end(), [&](Element g) {
        return L.conjugate(g, p.subgroup(a)) == p.subgroup(a);
      });
      if (!fixed) continue;
    }
    for (Direction dir : {Direction::Up, Direction::Down}) {
      PosetMap f(p.size());
      bool ok = true;
      for (std::size_t x = 0; x < p.size() && ok; ++x) {
        const SubgroupId y = dir == Direction::Up ? L.join(p.subgroup(x), p.subgroup(a))
                                                  : L.meet(p.subgroup(x), p.subgroup(a));
        const auto idx = p.index_of(y);
        if (idx)
          f[x] = *idx;
        else
          ok = false;
      }
      if (!ok) continue;
      ConicalCertificate c{std::move(f), a, dir,
                           std::string(dir == Direction::Up ? "join" : "meet") +
                               " with subgroup #" + std::to_string(p.subgroup(a).value)};
      if (verify_conical_contraction(p, c, fixed_by)) return c;
    }
  }
  return std::nullopt;
}

Verdict contractibility_verdict(const OrderComplex& c, const ContractibilityOptions& opts) {
  Verdict v;
  if (c.empty()) {
    v.status = Contractibility::NotContractible;
    v.evidence = Evidence::Empty;
    v.reason = "empty complex";
    return v;
  }
  if (opts.collapses) {
    if (auto steps = greedy_collapse(c)) {
      v.status = Contractibility::Contractible;
      v.evidence = Evidence::Collapse;
      v.reason = "collapses to a vertex in " + std::to_string(steps->size()) + " steps";
      v.collapses = std::move(*steps);
      return v;
    }
  }
  v.homology = homology(c);
  if (!v.homology->connected()) {
    v.status = Contractibility::NotContractible;
    v.evidence = Evidence::Disconnected;
    v.reason = "complex is disconnected";
    return v;
  }
  if (!v.homology->acyclic()) {
    v.status = Contractibility::NotContractible;
    v.evidence = Evidence::Homology;
    v.reason = "nonzero reduced homology";
    return v;
  }
  if (fundamental_group_trivial(c, opts)) {
    v.status = Contractibility::Contractible;
    v.evidence = Evidence::SimplyConnectedAcyclic;
    v.reason = "acyclic, and the edge-path group reduces to the trivial group";
    return v;
  }
  v.reason = "acyclic but the fundamental group was not shown trivial";
  return v;
}

Verdict contractibility_verdict(const GPoset& p, const ContractibilityOptions& opts) {
  Verdict v;
  if (p.empty()) {
    v.status = Contractibility::NotContractible;
    v.evidence = Evidence::Empty;
    v.reason = "empty poset";
    return v;
  }
  const auto mins = p.minimal_elements();
  const auto maxs = p.maximal_elements();
  if (mins.size() == 1 || maxs.size() == 1) {
    const bool has_min = mins.size() == 1;
    const std::size_t apex = has_min ? mins[0] : maxs[0];
    v.status = Contractibility::Contractible;
    v.evidence = Evidence::Cone;
    v.conical = ConicalCertificate{constant_map(p, apex), apex,
                                   has_min ? Direction::Down : Direction::Up,
                                   has_min ? "unique minimum" : "unique maximum"};
    v.reason = "cone on " + node_name(p, apex);
    return v;
  }
  if (opts.conical_search) {
    if (auto c = find_conical_contraction(p)) {
      v.status = Contractibility::Contractible;
      v.evidence = Evidence::Conical;
      v.reason = "conical contraction: " + c->description;
      v.conical = std::move(c);
      return v;
    }
  }
  if (component_count(p) > 1) {
    v.status = Contractibility::NotContractible;
    v.evidence = Evidence::Disconnected;
    v.reason = "poset has " + std::to_string(component_count(p)) + " components";
    return v;
  }
  return contractibility_verdict(OrderComplex::of(p, opts.max_simplices), opts);
}

Verdict equivariant_contractibility(const GPoset& p, SubgroupId k,
                                    const ContractibilityOptions& opts) {
  Verdict v;
  if (p.empty()) return contractibility_verdict(p, opts);
  if (p.has_lattice()) {
    if (auto c = find_conical_contraction(p, k)) {
      v.status = Contractibility::Contractible;
      v.evidence = Evidence::Conical;
      v.reason = "equivariant conical contraction: " + c->description;
      v.conical = std::move(c);
      return v;
    }
    // a contractible fixed-point set for every subgroup of K
    v.status = Contractibility::Contractible;
    v.evidence = Evidence::FixedPoints;
    for (SubgroupId h : p.lattice().subgroups_of(k)) {
      const Verdict sub = contractibility_verdict(fixed_point_subposet(p, h), opts);
      if (sub.status == Contractibility::Contractible) continue;
      v.status = sub.status;
      v.evidence = sub.evidence;
      v.reason = "fixed points of subgroup #" + std::to_string(h.value) + ": " + sub.reason;
      v.homology = sub.homology;
      return v;
    }
    v.reason = "every fixed-point subposet is contractible";
    return v;
  }
  return contractibility_verdict(p, opts);
}

bool reverify(const GPoset& p, const Verdict& v, const ContractibilityOptions& opts) {
  switch (v.status) {
    case Contractibility::Unknown:
      return true;
    case Contractibility::NotContractible:
      switch (v.evidence) {
        case Evidence::Empty:
          return p.empty();
        case Evidence::Disconnected:
          return !p.empty() && component_count(p) > 1;
        case Evidence::Homology:
          return !homology(OrderComplex::of(p, opts.max_simplices)).acyclic();
        default:
          return contractibility_verdict(p, opts).status == Contractibility::NotContractible;
      }
    case Contractibility::Contractible:
      switch (v.evidence) {
        case Evidence::Cone:
        case Evidence::Conical:
          return v.conical && static_cast<bool>(verify_conical_contraction(p, *v.conical));
        case Evidence::Collapse:
          return replay_collapses(OrderComplex::of(p, opts.max_simplices), v.collapses);
        case Evidence::SimplyConnectedAcyclic: {
          const auto c = OrderComplex::of(p, opts.max_simplices);
          return homology(c).acyclic() && fundamental_group_trivial(c, opts);
        }
        default:
          return contractibility_verdict(p, opts).status == Contractibility::Contractible;
      }
  }
  return false;
}

}  // namespace sclab
