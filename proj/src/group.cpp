#include "sclab/group.hpp"

#include <algorithm>
#include <deque>

#include "sclab/errors.hpp"

namespace sclab {

PermutationGroup PermutationGroup::generate(std::vector<Permutation> generators, std::string name,
                                            const GroupLimits& limits) {
  std::size_t degree = 0;
  for (const auto& g : generators) degree = std::max(degree, g.degree());
  for (auto& g : generators) g = g.extended(degree);

  std::unordered_map<Permutation, Element, PermutationHash> seen;
  std::vector<Permutation> found;
  std::deque<std::size_t> queue;
  auto add = [&](Permutation p) {
    if (seen.count(p)) return;
    if (found.size() >= limits.max_order)
      throw CapExceeded("group order exceeds cap " + std::to_string(limits.max_order));
    seen.emplace(p, static_cast<Element>(found.size()));
    queue.push_back(found.size());
    found.push_back(std::move(p));
  };
  add(Permutation::identity(degree));
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (const auto& g : generators) add(found[k] * g);
  }

  PermutationGroup G;
  G.name_ = std::move(name);
  G.degree_ = degree;
  G.generators_ = std::move(generators);
  std::sort(found.begin(), found.end());
  G.elements_ = std::move(found);
  const std::size_t n = G.elements_.size();
  G.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) G.index_.emplace(G.elements_[i], static_cast<Element>(i));

  G.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      G.table_[a * n + b] = G.index_.at(G.elements_[a] * G.elements_[b]);

  G.inverse_.resize(n);
  G.element_order_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    Element x = static_cast<Element>(a);
    std::uint32_t k = 1;
    while (x != 0) {
      x = G.mul(x, static_cast<Element>(a));
      ++k;
    }
    G.element_order_[a] = k;
    // a^(k-1) is the inverse
    Element y = 0;
    for (std::uint32_t j = 1; j < k; ++j) y = G.mul(y, static_cast<Element>(a));
    G.inverse_[a] = y;
  }
  for (const auto& g : G.generators_) G.generator_elements_.push_back(G.index_.at(g));
  return G;
}

std::optional<Element> PermutationGroup::index_of(const Permutation& p) const {
  const Permutation q = p.degree() < degree_ ? p.extended(degree_) : p;
  auto it = index_.find(q);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementSet PermutationGroup::all_elements() const {
  ElementSet s(order());
  for (std::size_t i = 0; i < order(); ++i) s.set(i);
  return s;
}

ElementSet PermutationGroup::closure(const ElementSet& seed) const {
  std::vector<Element> gens;
  seed.for_each([&](std::size_t x) {
    if (x != 0) gens.push_back(static_cast<Element>(x));
  });
  return closure(gens);
}

ElementSet PermutationGroup::closure(const std::vector<Element>& generators) const {
  ElementSet out(order());
  std::vector<Element> stack{identity()};
  out.set(identity());
  while (!stack.empty()) {
    const Element x = stack.back();
    stack.pop_back();
    for (Element g : generators) {
      const Element y = mul(x, g);
      if (!out.test(y)) {
        out.set(y);
        stack.push_back(y);
      }
    }
  }
  return out;
}

std::uint64_t PermutationGroup::content_hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    for (int k = 0; k < 4; ++k) {
      h ^= (v >> (16 * k)) & 0xffff;
      h *= 1099511628211ULL;
    }
  };
  mix(degree_);
  mix(elements_.size());
  for (const auto& e : elements_)
    for (Point x : e.images()) mix(x);
  return h;
}

std::size_t p_part(std::size_t n, int p) {
  std::size_t r = 1;
  while (n % static_cast<std::size_t>(p) == 0) {
    n /= static_cast<std::size_t>(p);
    r *= static_cast<std::size_t>(p);
  }
  return r;
}

bool is_power_of(std::size_t n, int p) { return n >= 1 && p_part(n, p) == n; }

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> prime_divisors(std::size_t n) {
  std::vector<int> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

}  // namespace sclab
