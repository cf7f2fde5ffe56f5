#include "bg/hamilton.hpp"

#include <algorithm>
#include <stdexcept>

namespace bg {

namespace {

class PathSearch {
 public:
  PathSearch(const AdjacencyGraph& g, int to) : adj_(g.neighbors()), to_(to), used_(adj_.size(), false) {}

  bool run(int from) {
    used_[from] = true;
    path_.push_back(from);
    return extend();
  }

  std::vector<int> path() const { return path_; }

 private:
  int free_degree(int v) const {
    int d = 0;
    for (int w : adj_[v]) d += used_[w] ? 0 : 1;
    return d;
  }

  // Unvisited vertices plus the current end must stay connected.
  bool connected_rest() const {
    const int total = static_cast<int>(adj_.size()) - static_cast<int>(path_.size()) + 1;
    std::vector<bool> seen(adj_.size(), false);
    std::vector<int> stack{path_.back()};
    seen[path_.back()] = true;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v]) {
        if (used_[w] || seen[w]) continue;
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
    return reached == total;
  }

  bool extend() {
    const int here = path_.back();
    if (path_.size() == adj_.size()) return here == to_;
    if (here == to_) return false;
    if (!connected_rest()) return false;
    std::vector<int> next;
    for (int w : adj_[here]) {
      if (!used_[w]) next.push_back(w);
    }
    std::sort(next.begin(), next.end(), [&](int a, int b) { return free_degree(a) < free_degree(b); });
    for (int w : next) {
      if (w == to_ && path_.size() + 1 != adj_.size()) continue;
      used_[w] = true;
      path_.push_back(w);
      if (!dead_end() && extend()) return true;
      path_.pop_back();
      used_[w] = false;
    }
    return false;
  }

  bool dead_end() const {
    // every unvisited vertex except the target sits inside the remaining
    // path, so it needs two neighbours among the unvisited ones and the end
    const int here = path_.back();
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (used_[v] || static_cast<int>(v) == to_) continue;
      int d = 0;
      for (int w : adj_[v]) d += (!used_[w] || w == here) ? 1 : 0;
      if (d < 2) return true;
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  int to_;
  std::vector<bool> used_;
  std::vector<int> path_;
};

}  // namespace

std::optional<std::vector<int>> hamiltonian_path(const AdjacencyGraph& g, int from, int to) {
  const int count = static_cast<int>(g.vertices.size());
  if (from < 0 || from >= count || to < 0 || to >= count) throw std::out_of_range("vertex index out of range");
  if (count == 1) {
    if (from == to) return std::vector<int>{from};
    return std::nullopt;
  }
  if (from == to) return std::nullopt;
  PathSearch search(g, to);
  if (!search.run(from)) return std::nullopt;
  return search.path();
}

bool is_hamiltonian_path(const AdjacencyGraph& g, const std::vector<int>& path, int from, int to) {
  if (path.size() != g.vertices.size() || path.empty() || path.front() != from || path.back() != to) return false;
  std::vector<bool> seen(g.vertices.size(), false);
  for (int v : path) {
    if (v < 0 || v >= static_cast<int>(seen.size()) || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const int a = std::min(path[k], path[k + 1]), b = std::max(path[k], path[k + 1]);
    if (!std::binary_search(g.edges.begin(), g.edges.end(), std::make_pair(a, b))) return false;
  }
  return true;
}

}  // namespace bg
