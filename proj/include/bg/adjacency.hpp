#ifndef BG_ADJACENCY_HPP
#define BG_ADJACENCY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bg/vertices.hpp"

namespace bg {

/// Decomposition oracle: v1, v2 are adjacent iff no other pair of vertices
/// v3 != v4 has v1 + v2 = v3 + v4. Such pairs share the intersection of D1,
/// D2 and split their symmetric difference, so only splits are searched.
/// Inputs must be distinct vertices on the same player set.
bool adjacent_oracle(const VertexCollection& d1, const VertexCollection& d2);

/// The split found by the oracle, when the vertices are not adjacent.
std::optional<std::pair<VertexCollection, VertexCollection>> find_decomposition(const VertexCollection& d1,
                                                                               const VertexCollection& d2);

/// Structural criteria for vertices whose intersections are singletons {i},
/// {j}. nullopt when either intersection is not a singleton.
std::optional<bool> adjacent_by_theorem(const VertexCollection& d1, const VertexCollection& d2);

/// Theorem-based answer when it applies, the oracle otherwise.
/// Throws std::invalid_argument for equal inputs, mismatched n or non-vertices.
bool are_adjacent(const VertexCollection& d1, const VertexCollection& d2);

struct AdjacencyGraph {
  std::vector<VertexCollection> vertices;
  std::vector<std::pair<int, int>> edges;  ///< (a, b) with a < b, ascending
  std::vector<std::vector<int>> neighbors() const;
};

inline constexpr int kGraphDefaultCap = 3;
inline constexpr int kGraphLargeCap = 4;

/// Graph over enumerate_vertices(n). Parallel over the first endpoint.
/// Throws std::out_of_range above the cap.
AdjacencyGraph adjacency_graph(int n, bool allow_large = false);
AdjacencyGraph adjacency_graph_serial(int n, bool allow_large = false);

/// Core of lambda v1 + (1 - lambda) v2 for adjacent vertices, against the
/// point-core prediction for singleton intersections {i}, {j}: always when
/// i = j, and for i != j when n <= 4.
struct EdgeCoreReport {
  int dimension = -1;
  bool point_core = false;
  std::optional<bool> predicted;
  bool agrees = true;  ///< true when there is no prediction
};
/// Throws std::invalid_argument for non-adjacent inputs or lambda outside (0, 1).
EdgeCoreReport edge_point_core_check(const VertexCollection& d1, const VertexCollection& d2, const Rational& lambda);

}  // namespace bg

#endif  // BG_ADJACENCY_HPP
