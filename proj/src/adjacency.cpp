#include "bg/adjacency.hpp"

#include <algorithm>
#include <stdexcept>

#include "bg/core.hpp"
#include "bg/linalg.hpp"
#include "bg/parallel.hpp"

namespace bg {

namespace {

void check_pair(const VertexCollection& d1, const VertexCollection& d2) {
  if (d1.players() != d2.players()) throw std::invalid_argument("vertices on different player sets");
  if (d1 == d2) throw std::invalid_argument("vertices are identical");
  if (!d1.is_vertex() || !d2.is_vertex()) throw std::invalid_argument("collection is not a vertex");
}

Coalition meet_of(const std::vector<Coalition>& sets, int n) {
  Coalition out = Coalition::grand(n);
  for (Coalition s : sets) out = out & s;
  return out;
}

std::vector<Coalition> minus(const VertexCollection& a, const VertexCollection& b) {
  std::vector<Coalition> out;
  std::set_difference(a.sets().begin(), a.sets().end(), b.sets().begin(), b.sets().end(), std::back_inserter(out));
  return out;
}

// Splits of D1 delta D2 into two sides, each joined with the common part,
// such that both sides are vertices and the pair differs from {D1, D2}.
class SplitSearch {
 public:
  SplitSearch(const VertexCollection& d1, const VertexCollection& d2, bool allow_empty_side)
      : n_(d1.players()), allow_empty_(allow_empty_side) {
    std::set_intersection(d1.sets().begin(), d1.sets().end(), d2.sets().begin(), d2.sets().end(),
                          std::back_inserter(common_));
    only1_ = minus(d1, d2);
    only2_ = minus(d2, d1);
    delta_ = only1_;
    delta_.insert(delta_.end(), only2_.begin(), only2_.end());
    std::sort(delta_.begin(), delta_.end());
    side_.assign(delta_.size(), false);
  }

  std::optional<std::pair<VertexCollection, VertexCollection>> run() {
    if (delta_.empty()) return std::nullopt;
    const Coalition base = meet_of(common_, n_);
    const int base_count = static_cast<int>(common_.size());
    // the first element goes to side 3; the mirrored split is the same pair
    side_[0] = true;
    if (!dfs(1, base & delta_[0], base_count + 1, base, base_count)) return std::nullopt;
    std::vector<Coalition> d3 = common_, d4 = common_;
    for (std::size_t k = 0; k < delta_.size(); ++k) (side_[k] ? d3 : d4).push_back(delta_[k]);
    return std::make_pair(VertexCollection(n_, std::move(d3)), VertexCollection(n_, std::move(d4)));
  }

 private:
  bool side_ok(Coalition meet, int count) const { return count == 0 ? allow_empty_ : !meet.empty(); }

  bool dfs(std::size_t k, Coalition meet3, int count3, Coalition meet4, int count4) {
    if (count3 > 0 && meet3.empty()) return false;
    if (count4 > 0 && meet4.empty()) return false;
    if (k == delta_.size()) return side_ok(meet3, count3) && side_ok(meet4, count4) && !is_original();
    const Coalition s = delta_[k];
    side_[k] = true;
    if (dfs(k + 1, meet3 & s, count3 + 1, meet4, count4)) return true;
    side_[k] = false;
    return dfs(k + 1, meet3, count3, meet4 & s, count4 + 1);
  }

  bool is_original() const {
    std::vector<Coalition> three;
    for (std::size_t k = 0; k < delta_.size(); ++k) {
      if (side_[k]) three.push_back(delta_[k]);
    }
    return three == only1_ || three == only2_;
  }

  int n_;
  bool allow_empty_;
  std::vector<Coalition> common_, only1_, only2_, delta_;
  std::vector<bool> side_;
};

bool theorem_common_part(const VertexCollection& d1, const VertexCollection& d2, int i, int j,
                         const std::vector<Coalition>& common) {
  const std::vector<Coalition> only1 = minus(d1, d2), only2 = minus(d2, d1);
  for (Coalition s : only1) {
    if (s.contains(j)) return false;
  }
  for (Coalition s : only2) {
    if (s.contains(i)) return false;
  }
  const int n = d1.players();
  const Coalition t = meet_of(common, n) - Coalition::singleton(i) - Coalition::singleton(j);
  auto misses_both = [](const std::vector<Coalition>& family, Coalition a, Coalition b) {
    return std::any_of(family.begin(), family.end(), [&](Coalition s) { return !a.subset_of(s) && !b.subset_of(s); });
  };
  // all subsets of t, the empty one included
  std::vector<Coalition> subsets{Coalition()};
  for_each_nonempty_subset(t, [&](Coalition k) { subsets.push_back(k); });
  for (Coalition k1 : subsets) {
    for (Coalition k2 : subsets) {
      if (!(k1 & k2).empty()) continue;
      for (Coalition k3 : subsets) {
        if ((k1 & k3).empty()) continue;
        for (Coalition k4 : subsets) {
          if (!(k3 & k4).empty() || (k2 & k4).empty()) continue;
          if (!misses_both(only1, k1, k2) && !misses_both(only2, k3, k4)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::optional<std::pair<VertexCollection, VertexCollection>> find_decomposition(const VertexCollection& d1,
                                                                               const VertexCollection& d2) {
  check_pair(d1, d2);
  return SplitSearch(d1, d2, true).run();
}

bool adjacent_oracle(const VertexCollection& d1, const VertexCollection& d2) { return !find_decomposition(d1, d2); }

std::optional<bool> adjacent_by_theorem(const VertexCollection& d1, const VertexCollection& d2) {
  check_pair(d1, d2);
  const Coalition m1 = d1.intersection(), m2 = d2.intersection();
  if (d1.empty() || d2.empty() || m1.size() != 1 || m2.size() != 1) return std::nullopt;
  const int i = m1.first(), j = m2.first();
  const std::vector<Coalition> only1 = minus(d1, d2), only2 = minus(d2, d1);
  if (i == j) return (only1.empty() || only2.empty()) && only1.size() + only2.size() == 1;

  std::vector<Coalition> common;
  std::set_intersection(d1.sets().begin(), d1.sets().end(), d2.sets().begin(), d2.sets().end(),
                        std::back_inserter(common));
  if (!common.empty()) return theorem_common_part(d1, d2, i, j, common);

  // disjoint families: a member of D1 holding j (or of D2 holding i) can switch sides
  for (Coalition s : d1.sets()) {
    if (s.contains(j)) return false;
  }
  for (Coalition s : d2.sets()) {
    if (s.contains(i)) return false;
  }
  return !SplitSearch(d1, d2, false).run();
}

bool are_adjacent(const VertexCollection& d1, const VertexCollection& d2) {
  if (auto fast = adjacent_by_theorem(d1, d2)) return *fast;
  return adjacent_oracle(d1, d2);
}

std::vector<std::vector<int>> AdjacencyGraph::neighbors() const {
  std::vector<std::vector<int>> out(vertices.size());
  for (auto [a, b] : edges) {
    out[a].push_back(b);
    out[b].push_back(a);
  }
  return out;
}

namespace {

AdjacencyGraph build_graph(int n, bool allow_large, bool parallel) {
  check_player_count(n);
  const int cap = allow_large ? kGraphLargeCap : kGraphDefaultCap;
  if (n > cap) {
    throw std::out_of_range("adjacency graph supports n <= " + std::to_string(cap) +
                            (allow_large ? "" : " (n = 4 needs the large-enumeration opt-in)"));
  }
  AdjacencyGraph g;
  g.vertices = enumerate_vertices(n);
  const long long count = static_cast<long long>(g.vertices.size());
  std::vector<std::vector<std::pair<int, int>>> rows(g.vertices.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(par::max_threads()) if (parallel)
  for (long long a = 0; a < count; ++a) {
    for (long long b = a + 1; b < count; ++b) {
      if (are_adjacent(g.vertices[a], g.vertices[b])) rows[a].emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  for (auto& r : rows) g.edges.insert(g.edges.end(), r.begin(), r.end());
  return g;
}

}  // namespace

AdjacencyGraph adjacency_graph(int n, bool allow_large) { return build_graph(n, allow_large, true); }
AdjacencyGraph adjacency_graph_serial(int n, bool allow_large) { return build_graph(n, allow_large, false); }

EdgeCoreReport edge_point_core_check(const VertexCollection& d1, const VertexCollection& d2, const Rational& lambda) {
  if (lambda <= 0 || lambda >= 1) throw std::invalid_argument("lambda must lie strictly between 0 and 1");
  if (!are_adjacent(d1, d2)) throw std::invalid_argument("vertices are not adjacent");
  const int n = d1.players();
  const Game v = d1.game() * lambda + d2.game() * (1 - lambda);
  EdgeCoreReport out;
  out.dimension = n - static_cast<int>(coalition_rank(n, effective_coalitions_lp(v)));
  out.point_core = out.dimension == 0;
  const Coalition m1 = d1.intersection(), m2 = d2.intersection();
  if (!d1.empty() && !d2.empty() && m1.size() == 1 && m2.size() == 1) {
    if (m1 == m2 || n <= 4) out.predicted = true;
  }
  out.agrees = !out.predicted || *out.predicted == out.point_core;
  return out;
}

}  // namespace bg
