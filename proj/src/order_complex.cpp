#include "sclab/order_complex.hpp"

#include <algorithm>
#include <set>

#include "sclab/errors.hpp"

namespace sclab {

namespace {

void too_many(std::size_t cap) {
  throw SizeCap("complex has more than " + std::to_string(cap) + " simplices");
}

}  // namespace

void OrderComplex::add_closed(std::vector<Simplex> all) {
  by_dim_.clear();
  for (auto& s : all) {
    const std::size_t d = s.size() - 1;
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    by_dim_[d].push_back(std::move(s));
  }
  for (auto& layer : by_dim_) std::sort(layer.begin(), layer.end());
}

OrderComplex OrderComplex::of(const GPoset& p, std::size_t max_simplices) {
  const std::size_t n = p.size();
  // Vertices are renumbered along a linear extension so every chain is an
  // increasing vertex list.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<std::size_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.less(j, i)) ++below[i];
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });

  OrderComplex c;
  c.labels_.resize(n);
  for (std::size_t v = 0; v < n; ++v) c.labels_[v] = p.label(order[v]);

  std::vector<std::vector<std::uint32_t>> succ(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (p.less(order[a], order[b])) succ[a].push_back(static_cast<std::uint32_t>(b));

  std::vector<Simplex> all;
  Simplex chain;
  auto extend = [&](auto&& self, std::uint32_t v) -> void {
    chain.push_back(v);
    if (all.size() >= max_simplices) too_many(max_simplices);
    all.push_back(chain);
    for (std::uint32_t w : succ[v]) {
      // w must lie above every chain member; it does since v is the top and < is transitive
      self(self, w);
    }
    chain.pop_back();
  };
  for (std::uint32_t v = 0; v < n; ++v) extend(extend, v);
  c.add_closed(std::move(all));
  return c;
}

OrderComplex OrderComplex::from_facets(std::size_t n_vertices, std::vector<Simplex> facets,
                                       std::size_t max_simplices) {
  std::set<Simplex> faces;
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) continue;
    if (f.back() >= n_vertices) throw Error("facet vertex out of range");
    if (f.size() > 30) too_many(max_simplices);
    const std::uint32_t k = static_cast<std::uint32_t>(f.size());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      Simplex s;
      for (std::uint32_t i = 0; i < k; ++i)
        if (mask >> i & 1) s.push_back(f[i]);
      faces.insert(std::move(s));
      if (faces.size() > max_simplices) too_many(max_simplices);
    }
  }
  OrderComplex c;
  c.labels_.resize(n_vertices);
  for (std::size_t v = 0; v < n_vertices; ++v) c.labels_[v] = static_cast<std::uint32_t>(v);
  // isolated vertices still count
  for (std::uint32_t v = 0; v < n_vertices; ++v) faces.insert(Simplex{v});
  c.add_closed(std::vector<Simplex>(faces.begin(), faces.end()));
  return c;
}

std::size_t OrderComplex::total_count() const {
  std::size_t t = 0;
  for (const auto& layer : by_dim_) t += layer.size();
  return t;
}

std::optional<std::size_t> OrderComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > by_dim_.size()) return std::nullopt;
  const auto& layer = by_dim_[s.size() - 1];
  auto it = std::lower_bound(layer.begin(), layer.end(), s);
  if (it == layer.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - layer.begin());
}

std::vector<Simplex> OrderComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (std::size_t d = 0; d < by_dim_.size(); ++d) {
    std::vector<char> covered(by_dim_[d].size(), 0);
    if (d + 1 < by_dim_.size()) {
      for (const auto& t : by_dim_[d + 1])
        for (std::size_t skip = 0; skip < t.size(); ++skip) {
          Simplex f;
          for (std::size_t i = 0; i < t.size(); ++i)
            if (i != skip) f.push_back(t[i]);
          covered[*index_of(f)] = 1;
        }
    }
    for (std::size_t i = 0; i < by_dim_[d].size(); ++i)
      if (!covered[i]) out.push_back(by_dim_[d][i]);
  }
  return out;
}

long long OrderComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t d = 0; d < by_dim_.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim_[d].size());
  return chi;
}

std::string OrderComplex::to_facet_text() const {
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& s : maximal_simplices()) {
    std::vector<std::uint32_t> r;
    for (auto v : s) r.push_back(labels_[v]);
    std::sort(r.begin(), r.end());
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(r[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace sclab
