#include "sclab/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "sclab/errors.hpp"

namespace sclab {

namespace {

using Column = std::vector<std::pair<std::uint32_t, mpz_class>>;

// c - a*p, both sorted by row
Column axpy(const Column& c, const mpz_class& a, const Column& p) {
  Column out;
  out.reserve(c.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < c.size() || j < p.size()) {
    if (j == p.size() || (i < c.size() && c[i].first < p[j].first)) {
      out.push_back(c[i++]);
    } else if (i == c.size() || p[j].first < c[i].first) {
      out.emplace_back(p[j].first, -a * p[j].second);
      ++j;
    } else {
      mpz_class v = c[i].second - a * p[j].second;
      if (v != 0) out.emplace_back(c[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<mpz_class> dense_snf(std::vector<std::vector<mpz_class>> A) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero |entry| as pivot
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (A[i][j] != 0 && (pi == m || abs(A[i][j]) < abs(A[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    std::swap(A[t], A[pi]);
    for (auto& row : A) std::swap(row[t], row[pj]);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A[i][t] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
        for (std::size_t j = t; j < n; ++j) A[i][j] -= q * A[t][j];
        if (A[i][t] != 0) {
          std::swap(A[i], A[t]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A[t][j] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i) A[i][j] -= q * A[i][t];
        if (A[t][j] != 0) {
          for (auto& row : A) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the rest, else fold the offending row in and redo
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A[i][j] % A[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) A[t][k] += A[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(A[t][t]));
  }
  // gcd/lcm pass keeps the divisibility chain even if the loop above left gaps
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = static_cast<unsigned __int128>(result) * base % p;
    base = static_cast<unsigned __int128>(base) * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t t = 0;
  for (const auto& c : columns) t += c.size();
  return t;
}

SparseIntMatrix boundary_matrix(const OrderComplex& c, std::size_t d) {
  SparseIntMatrix m;
  m.cols = c.count(d);
  m.columns.resize(m.cols);
  if (d == 0) {
    m.rows = 1;
    for (auto& col : m.columns) col.emplace_back(0, 1);
    return m;
  }
  m.rows = c.count(d - 1);
  const auto& layer = c.simplices(d);
  for (std::size_t j = 0; j < layer.size(); ++j) {
    const Simplex& s = layer[j];
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      Simplex f;
      f.reserve(s.size() - 1);
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) f.push_back(s[i]);
      const auto row = c.index_of(f);
      if (!row) throw Error("complex is not closed under faces");
      m.columns[j].emplace_back(static_cast<std::uint32_t>(*row), skip % 2 == 0 ? 1 : -1);
    }
    std::sort(m.columns[j].begin(), m.columns[j].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return m;
}

std::vector<mpz_class> elementary_divisors(const SparseIntMatrix& m) {
  std::vector<Column> cols = m.columns;
  std::vector<std::set<std::uint32_t>> row_cols(m.rows);
  std::vector<char> live(cols.size(), 1);
  for (std::uint32_t j = 0; j < cols.size(); ++j) {
    if (cols[j].empty()) live[j] = 0;
    for (const auto& [r, v] : cols[j]) row_cols[r].insert(j);
  }

  std::size_t units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::uint32_t c = 0; c < cols.size(); ++c) {
      if (!live[c]) continue;
      if (cols[c].empty()) {
        live[c] = 0;
        continue;
      }
      // unit pivot in this column, sparsest row first
      std::size_t best = cols[c].size();
      for (std::size_t k = 0; k < cols[c].size(); ++k) {
        if (abs(cols[c][k].second) != 1) continue;
        if (best == cols[c].size() ||
            row_cols[cols[c][k].first].size() < row_cols[cols[c][best].first].size())
          best = k;
      }
      if (best == cols[c].size()) continue;
      const std::uint32_t r = cols[c][best].first;
      const mpz_class v = cols[c][best].second;
      const std::vector<std::uint32_t> others(row_cols[r].begin(), row_cols[r].end());
      for (std::uint32_t c2 : others) {
        if (c2 == c) continue;
        auto it = std::lower_bound(cols[c2].begin(), cols[c2].end(), r,
                                   [](const auto& e, std::uint32_t row) { return e.first < row; });
        const mpz_class a = it->second * v;
        Column next = axpy(cols[c2], a, cols[c]);
        for (const auto& [row, _] : cols[c2]) row_cols[row].erase(c2);
        for (const auto& [row, _] : next) row_cols[row].insert(c2);
        cols[c2] = std::move(next);
        if (cols[c2].empty()) live[c2] = 0;
      }
      for (const auto& [row, _] : cols[c]) row_cols[row].erase(c);
      live[c] = 0;
      ++units;
      progress = true;
    }
  }

  // what survives has no unit entries: finish densely
  std::vector<std::uint32_t> rest_cols;
  std::map<std::uint32_t, std::size_t> rest_rows;
  for (std::uint32_t c = 0; c < cols.size(); ++c)
    if (live[c] && !cols[c].empty()) {
      rest_cols.push_back(c);
      for (const auto& [r, _] : cols[c]) rest_rows.emplace(r, 0);
    }
  std::size_t k = 0;
  for (auto& [r, idx] : rest_rows) idx = k++;
  std::vector<mpz_class> divisors(units, mpz_class(1));
  if (!rest_cols.empty()) {
    std::vector<std::vector<mpz_class>> A(rest_rows.size(),
                                          std::vector<mpz_class>(rest_cols.size(), 0));
    for (std::size_t j = 0; j < rest_cols.size(); ++j)
      for (const auto& [r, v] : cols[rest_cols[j]]) A[rest_rows[r]][j] = v;
    for (auto& d : dense_snf(std::move(A))) divisors.push_back(std::move(d));
  }
  return divisors;
}

std::size_t rank_mod_p(const SparseIntMatrix& m, int p) {
  const std::uint64_t P = static_cast<std::uint64_t>(p);
  using ModColumn = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
  std::unordered_map<std::uint32_t, ModColumn> pivots;  // lowest row -> reduced column
  std::size_t rank = 0;
  const mpz_class mp(static_cast<unsigned long>(P));
  for (const auto& col : m.columns) {
    ModColumn c;
    for (const auto& [r, v] : col) {
      mpz_class x;
      mpz_fdiv_r(x.get_mpz_t(), v.get_mpz_t(), mp.get_mpz_t());
      if (x != 0) c.emplace_back(r, x.get_ui());
    }
    while (!c.empty()) {
      const auto [low, lv] = c.back();
      auto it = pivots.find(low);
      if (it == pivots.end()) {
        pivots.emplace(low, std::move(c));
        ++rank;
        break;
      }
      const ModColumn& q = it->second;
      const std::uint64_t factor =
          static_cast<unsigned __int128>(lv) * mod_inverse(q.back().second, P) % P;
      ModColumn next;
      std::size_t i = 0, j = 0;
      while (i < c.size() || j < q.size()) {
        if (j == q.size() || (i < c.size() && c[i].first < q[j].first)) {
          next.push_back(c[i++]);
        } else {
          const std::uint64_t sub = static_cast<unsigned __int128>(factor) * q[j].second % P;
          std::uint64_t val = (i < c.size() && c[i].first == q[j].first) ? c[i++].second : 0;
          val = (val + P - sub) % P;
          if (val) next.emplace_back(q[j].first, val);
          ++j;
        }
      }
      c = std::move(next);
    }
  }
  return rank;
}

bool composes_to_zero(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  for (const auto& col : b.columns) {
    std::map<std::uint32_t, mpz_class> acc;
    for (const auto& [k, v] : col)
      for (const auto& [r, w] : a.columns[k]) acc[r] += v * w;
    for (const auto& [r, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

bool HomologyProfile::acyclic() const {
  if (empty) return false;
  for (auto b : reduced_betti)
    if (b) return false;
  for (const auto& t : torsion)
    if (!t.empty()) return false;
  return true;
}

bool HomologyProfile::same_homology(const HomologyProfile& other) const {
  if (empty != other.empty) return false;
  auto trim = [](const HomologyProfile& h) {
    std::size_t n = h.reduced_betti.size();
    while (n > 0 && h.reduced_betti[n - 1] == 0 && h.torsion[n - 1].empty()) --n;
    return n;
  };
  const std::size_t n = trim(*this);
  if (n != trim(other)) return false;
  for (std::size_t d = 0; d < n; ++d)
    if (reduced_betti[d] != other.reduced_betti[d] || torsion[d] != other.torsion[d]) return false;
  return true;
}

HomologyProfile homology(const OrderComplex& c) {
  HomologyProfile h;
  h.empty = c.empty();
  h.euler_characteristic = c.euler_characteristic();
  if (h.empty) return h;
  const std::size_t top = static_cast<std::size_t>(c.dimension());
  for (std::size_t d = 0; d <= top; ++d) h.simplex_counts.push_back(c.count(d));

  constexpr int kCheckPrime = 1'000'003;
  std::vector<std::size_t> rank(top + 2, 0);
  std::vector<std::vector<mpz_class>> divisors(top + 2);
  SparseIntMatrix prev;
  for (std::size_t d = 0; d <= top; ++d) {
    SparseIntMatrix m = boundary_matrix(c, d);
    if (d > 0 && !composes_to_zero(prev, m)) throw Error("boundary of boundary is not zero");
    divisors[d] = elementary_divisors(m);
    rank[d] = divisors[d].size();
    std::size_t coprime = 0;
    for (const auto& x : divisors[d])
      if (x % kCheckPrime != 0) ++coprime;
    if (rank_mod_p(m, kCheckPrime) != coprime)
      throw Error("integer and modular ranks disagree in dimension " + std::to_string(d));
    prev = std::move(m);
  }
  h.reduced_betti.resize(top + 1);
  h.torsion.resize(top + 1);
  for (std::size_t d = 0; d <= top; ++d) {
    h.reduced_betti[d] = c.count(d) - rank[d] - rank[d + 1];
    for (const auto& x : divisors[d + 1])
      if (x > 1) h.torsion[d].push_back(x);
  }
  return h;
}

nlohmann::json to_json(const HomologyProfile& h) {
  nlohmann::json j;
  j["empty"] = h.empty;
  j["reduced_betti"] = h.reduced_betti;
  auto& t = j["torsion"] = nlohmann::json::array();
  for (const auto& layer : h.torsion) {
    auto row = nlohmann::json::array();
    for (const auto& x : layer) row.push_back(x.get_str());
    t.push_back(std::move(row));
  }
  j["euler_characteristic"] = h.euler_characteristic;
  j["simplex_counts"] = h.simplex_counts;
  return j;
}

}  // namespace sclab
