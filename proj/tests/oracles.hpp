// Reference computations used only by the tests. They avoid the library's
// algorithms and rely on brute force over small exact systems; the n = 3
// tables are transcribed by hand.
#ifndef BG_TESTS_ORACLES_HPP
#define BG_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Row = std::vector<Q>;

inline int popcount(std::uint32_t m) { return __builtin_popcount(m); }

/// Exact rank by plain row reduction.
inline int rank_of(std::vector<Row> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i) {
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

/// Basis of {x : m x = 0} over `cols` unknowns.
inline std::vector<Row> nullspace(std::vector<Row> m, std::size_t cols) {
  std::vector<int> pivot_col;
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i) {
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    const Q lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<Row> out;
  const std::set<int> pivots(pivot_col.begin(), pivot_col.end());
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivots.count(static_cast<int>(f))) continue;
    Row x(cols);
    x[f] = 1;
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = -m[i][f];
    out.push_back(x);
  }
  return out;
}

/// Extreme rays of the pointed part of {x : a x <= 0}, intersected with the
/// orthogonal complement of its lineality space, by brute force over row
/// subsets. Rays are returned scaled to a leading +-1 entry.
inline std::set<Row> pointed_rays(const std::vector<Row>& a, std::size_t cols) {
  const auto lin = nullspace(a, cols);
  std::set<Row> out;
  const std::size_t k = a.size();
  for (std::uint32_t sub = 0; sub < (1u << k); ++sub) {
    std::vector<Row> m = lin;
    for (std::size_t i = 0; i < k; ++i) {
      if ((sub >> i) & 1u) m.push_back(a[i]);
    }
    const auto ns = nullspace(m, cols);
    if (ns.size() != 1) continue;
    for (int sign : {1, -1}) {
      Row w = ns[0];
      bool ok = true;
      for (const auto& row : a) {
        Q dot = 0;
        for (std::size_t c = 0; c < cols; ++c) dot += row[c] * w[c] * sign;
        ok = ok && dot <= 0;
      }
      if (!ok) continue;
      Q lead = 0;
      for (const auto& x : w) {
        if (x != 0) {
          lead = abs(x) * sign;
          break;
        }
      }
      for (auto& x : w) x /= lead;
      out.insert(w);
    }
  }
  return out;
}

/// Affine dimension of a point set (-1 when empty).
inline int affine_dim(const std::vector<Row>& pts) {
  if (pts.empty()) return -1;
  std::vector<Row> d;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    Row r(pts[k].size());
    for (std::size_t c = 0; c < r.size(); ++c) r[c] = pts[k][c] - pts[0][c];
    d.push_back(r);
  }
  return rank_of(d);
}

/// Solves sum_k lambda_k 1^{S_k} = 1^N; returns weights when the columns are
/// independent and the system is consistent.
inline bool unique_weights(int n, const std::vector<std::uint32_t>& sets, std::vector<Q>& out) {
  const int k = static_cast<int>(sets.size());
  std::vector<Row> aug(n, Row(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) aug[i][j] = (sets[j] >> i) & 1u;
    aug[i][k] = 1;
  }
  int r = 0;
  std::vector<int> pivcol;
  for (int c = 0; c < k; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i) {
      if (aug[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return false;  // dependent columns
    std::swap(aug[r], aug[piv]);
    for (int i = 0; i < n; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const Q f = aug[i][c] / aug[r][c];
      for (int j = c; j <= k; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (int i = r; i < n; ++i) {
    if (aug[i][k] != 0) return false;
  }
  out.assign(k, 0);
  for (int i = 0; i < r; ++i) out[pivcol[i]] = aug[i][k] / aug[i][pivcol[i]];
  return true;
}

/// Brute-force minimal balanced collections (excluding {N}): every family of
/// at most n proper coalitions with independent vectors and positive weights.
/// Result maps the ascending mask list to its weights.
inline std::map<std::vector<std::uint32_t>, std::vector<Q>> brute_mbc(int n) {
  std::map<std::vector<std::uint32_t>, std::vector<Q>> out;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t next) -> void {
    if (!cur.empty()) {
      std::vector<Q> w;
      if (unique_weights(n, cur, w)) {
        bool pos = true;
        for (const auto& x : w) pos = pos && x > 0;
        if (pos) out[cur] = w;
      }
    }
    if (static_cast<int>(cur.size()) == n) return;
    for (std::uint32_t m = next; m < full; ++m) {
      cur.push_back(m);
      self(self, m + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Adjacency in BG_+(n) by the rank of the inequalities tight at both
/// points: v(S) >= 0 for proper S and sum lambda_S v(S) <= 1 per m.b.c.
/// Points are families of proper coalitions given as masks.
inline bool geometric_adjacent(int n, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                               const std::map<std::vector<std::uint32_t>, std::vector<Q>>& mbc) {
  const std::uint32_t full = (1u << n) - 1;
  const std::set<std::uint32_t> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::vector<Row> tight;
  for (std::uint32_t m = 1; m < full; ++m) {
    if (!sa.count(m) && !sb.count(m)) {
      Row r(full - 1);
      r[m - 1] = 1;
      tight.push_back(r);
    }
  }
  for (const auto& [sets, w] : mbc) {
    Q va = 0, vb = 0;
    Row r(full - 1);
    for (std::size_t k = 0; k < sets.size(); ++k) {
      r[sets[k] - 1] = w[k];
      if (sa.count(sets[k])) va += w[k];
      if (sb.count(sets[k])) vb += w[k];
    }
    if (va == 1 && vb == 1) tight.push_back(r);
  }
  return rank_of(tight) == static_cast<int>(full) - 2;
}

/// Vertex test for a 0-1 point of BG_+(n): feasible and with tight
/// inequalities of full rank.
inline bool geometric_vertex(int n, const std::vector<std::uint32_t>& a,
                             const std::map<std::vector<std::uint32_t>, std::vector<Q>>& mbc) {
  const std::uint32_t full = (1u << n) - 1;
  const std::set<std::uint32_t> sa(a.begin(), a.end());
  std::vector<Row> tight;
  for (std::uint32_t m = 1; m < full; ++m) {
    if (!sa.count(m)) {
      Row r(full - 1);
      r[m - 1] = 1;
      tight.push_back(r);
    }
  }
  for (const auto& [sets, w] : mbc) {
    Q va = 0;
    Row r(full - 1);
    for (std::size_t k = 0; k < sets.size(); ++k) {
      r[sets[k] - 1] = w[k];
      if (sa.count(sets[k])) va += w[k];
    }
    if (va > 1) return false;
    if (va == 1) tight.push_back(r);
  }
  return rank_of(tight) == static_cast<int>(full) - 1;
}

/// A random game (values indexed by mask, index 0 unused) with
/// sum_{S in P} v(S) = v(N) for the all-singletons partition and every
/// {S} plus singletons of N \ S. The free variables of the reduced system
/// are drawn from small random fractions.
inline std::vector<Q> special_partition_game(int n, std::mt19937_64& rng) {
  const std::uint32_t full = (1u << n) - 1;
  const std::size_t vars = full + 1;
  std::vector<Row> eq;
  auto add_partition = [&](std::uint32_t lead) {  // lead = 0: all singletons
    Row r(vars);
    if (lead) r[lead] = 1;
    for (int i = 0; i < n; ++i) {
      if (!((lead >> i) & 1u)) r[1u << i] = 1;
    }
    r[full] = -1;
    eq.push_back(r);
  };
  add_partition(0);
  for (std::uint32_t s = 1; s < full; ++s) {
    if (popcount(s) > 1) add_partition(s);
  }
  // reduced row echelon form
  std::vector<int> pivot_of_row;
  int r = 0;
  for (std::size_t c = 1; c < vars && r < static_cast<int>(eq.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(eq.size()); ++i) {
      if (eq[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(eq[r], eq[piv]);
    const Q lead = eq[r][c];
    for (auto& x : eq[r]) x /= lead;
    for (int i = 0; i < static_cast<int>(eq.size()); ++i) {
      if (i == r || eq[i][c] == 0) continue;
      const Q f = eq[i][c];
      for (std::size_t k = 0; k < vars; ++k) eq[i][k] -= f * eq[r][k];
    }
    pivot_of_row.push_back(static_cast<int>(c));
    ++r;
  }
  std::set<int> pivots(pivot_of_row.begin(), pivot_of_row.end());
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  std::vector<Q> v(vars);
  for (std::size_t c = 1; c < vars; ++c) {
    if (!pivots.count(static_cast<int>(c))) {
      v[c] = Q(num(rng), den(rng));
      v[c].canonicalize();
    }
  }
  for (int i = 0; i < r; ++i) {
    Q x = 0;
    for (std::size_t c = 1; c < vars; ++c) {
      if (static_cast<int>(c) != pivot_of_row[i]) x -= eq[i][c] * v[c];
    }
    v[pivot_of_row[i]] = x;
  }
  return v;
}

/// The 19 vertices at n = 3: name and 0-1 values on 1, 2, 3, 12, 13, 23.
inline const std::vector<std::pair<std::string, std::vector<int>>>& vertex_rows_n3() {
  static const std::vector<std::pair<std::string, std::vector<int>>> rows = {
      {"u_123", {0, 0, 0, 0, 0, 0}},      {"u_1", {1, 0, 0, 1, 1, 0}},      {"u_2", {0, 1, 0, 1, 0, 1}},
      {"u_3", {0, 0, 1, 0, 1, 1}},        {"u_12", {0, 0, 0, 1, 0, 0}},     {"u_13", {0, 0, 0, 0, 1, 0}},
      {"u_23", {0, 0, 0, 0, 0, 1}},       {"u_12∨u_13", {0, 0, 0, 1, 1, 0}}, {"u_12∨u_23", {0, 0, 0, 1, 0, 1}},
      {"u_13∨u_23", {0, 0, 0, 0, 1, 1}}, {"d_1", {1, 0, 0, 0, 0, 0}},      {"d_2", {0, 1, 0, 0, 0, 0}},
      {"d_3", {0, 0, 1, 0, 0, 0}},        {"d_1,12", {1, 0, 0, 1, 0, 0}},   {"d_1,13", {1, 0, 0, 0, 1, 0}},
      {"d_2,12", {0, 1, 0, 1, 0, 0}},     {"d_2,23", {0, 1, 0, 0, 0, 1}},   {"d_3,13", {0, 0, 1, 0, 1, 0}},
      {"d_3,23", {0, 0, 1, 0, 0, 1}},
  };
  return rows;
}

/// Column order of vertex_rows_n3(): the coalitions 1, 2, 3, 12, 13, 23 as masks.
inline const std::vector<std::uint32_t>& vertex_columns_n3() {
  static const std::vector<std::uint32_t> cols = {1, 2, 4, 3, 5, 6};
  return cols;
}

/// The published drawing of the n = 3 adjacency graph, edge by edge. Its
/// node "2.12" is read as d_2,12; the duplicated edge d_3,13 -- d_2,12
/// appears once.
inline std::set<std::pair<std::string, std::string>> drawn_edges_n3() {
  const std::vector<std::pair<std::string, std::string>> raw = {
      {"u_1", "u_12∨u_13"},       {"u_1", "u_12∨u_23"},       {"u_1", "u_13∨u_23"},      {"u_1", "u_2"},
      {"u_1", "u_3"},             {"u_1", "d_1,12"},          {"u_1", "d_1,13"},         {"u_2", "d_2,12"},
      {"u_2", "u_12∨u_23"},       {"u_2", "u_12∨u_13"},       {"u_2", "u_13∨u_23"},      {"u_2", "u_3"},
      {"u_2", "d_2,23"},          {"u_3", "d_3,13"},          {"u_3", "u_13∨u_23"},      {"u_3", "u_12∨u_23"},
      {"u_3", "u_12∨u_13"},       {"u_3", "d_3,23"},          {"u_12∨u_13", "u_12"},     {"u_12∨u_13", "u_13"},
      {"u_12∨u_13", "u_13∨u_23"}, {"u_12∨u_13", "u_12∨u_23"}, {"u_12∨u_13", "d_1,13"},   {"u_12∨u_13", "d_3,13"},
      {"u_12∨u_13", "d_1,12"},    {"u_12∨u_13", "d_2,12"},    {"u_13∨u_23", "u_13"},     {"u_13∨u_23", "u_23"},
      {"u_13∨u_23", "u_12∨u_23"}, {"u_13∨u_23", "d_2,23"},    {"u_13∨u_23", "d_3,23"},   {"u_13∨u_23", "d_1,13"},
      {"u_13∨u_23", "d_3,13"},    {"u_12∨u_23", "u_12"},      {"u_12∨u_23", "u_23"},     {"u_12∨u_23", "d_2,23"},
      {"u_12∨u_23", "d_3,23"},    {"u_12∨u_23", "d_1,12"},    {"u_12∨u_23", "d_2,12"},   {"d_1,12", "u_12"},
      {"d_1,12", "d_1"},          {"d_1,12", "d_2,12"},       {"d_1,12", "d_3,23"},      {"d_2,12", "u_12"},
      {"d_2,12", "d_2"},          {"d_2,12", "d_3,13"},       {"d_1,13", "u_13"},        {"d_1,13", "d_1"},
      {"d_1,13", "d_3,13"},       {"d_1,13", "d_2,23"},       {"d_3,13", "u_13"},        {"d_3,13", "d_3"},
      {"d_2,23", "u_23"},         {"d_2,23", "d_2"},          {"d_3,23", "u_23"},        {"d_3,23", "d_3"},
      {"u_12", "u_123"},          {"u_12", "d_3"},            {"d_1", "u_123"},          {"d_1", "d_2"},
      {"d_1", "d_3"},             {"u_13", "u_123"},          {"u_13", "d_2"},           {"d_2", "u_123"},
      {"d_2", "d_3"},             {"u_23", "u_123"},          {"u_23", "d_1"},           {"d_3", "u_123"},
  };
  std::set<std::pair<std::string, std::string>> out;
  for (auto [a, b] : raw) out.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  return out;
}

/// The published Hamiltonian path from u_123 to d_2,23, as an edge list.
inline const std::vector<std::pair<std::string, std::string>>& drawn_path_edges_n3() {
  static const std::vector<std::pair<std::string, std::string>> e = {
      {"u_1", "u_12∨u_13"}, {"u_1", "d_1,12"},  {"u_2", "d_2,12"},      {"u_2", "u_12∨u_23"}, {"u_3", "u_13∨u_23"},
      {"u_3", "d_3,23"},    {"u_12∨u_13", "u_12"}, {"u_13∨u_23", "u_23"}, {"u_12∨u_23", "u_23"}, {"d_1,12", "d_1"},
      {"d_2,12", "d_2"},    {"d_1,13", "u_13"}, {"d_1,13", "d_1"},      {"d_3,13", "u_13"},   {"d_3,13", "d_3"},
      {"d_2,23", "d_2"},    {"d_3,23", "d_3"},  {"u_12", "u_123"},
  };
  return e;
}

/// Facet/ray incidence at n = 3 as printed: facet (ascending member masks)
/// -> incident rays, written r_12 for -delta_12 and r_1 for r_1.
inline const std::map<std::vector<std::uint32_t>, std::set<std::string>>& incidence_n3() {
  static const std::map<std::vector<std::uint32_t>, std::set<std::string>> t = {
      {{1, 2, 4}, {"r_12", "r_13", "r_23"}},
      {{1, 6}, {"r_12", "r_13", "r_2", "r_3"}},
      {{2, 5}, {"r_12", "r_23", "r_1", "r_3"}},
      {{3, 4}, {"r_13", "r_23", "r_1", "r_2"}},
      {{3, 5, 6}, {"r_1", "r_2", "r_3"}},
  };
  return t;
}

/// Pearson chi-square of counts against a uniform expectation.
inline double chi_square(const std::vector<long>& counts) {
  long total = 0;
  for (long c : counts) total += c;
  const double expect = static_cast<double>(total) / static_cast<double>(counts.size());
  double x = 0;
  for (long c : counts) x += (c - expect) * (c - expect) / expect;
  return x;
}

}  // namespace oracle

#endif  // BG_TESTS_ORACLES_HPP
