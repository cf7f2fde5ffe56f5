#ifndef BG_HAMILTON_HPP
#define BG_HAMILTON_HPP

#include <optional>
#include <vector>

#include "bg/adjacency.hpp"

namespace bg {

/// A path from `from` to `to` through every vertex exactly once, found by
/// backtracking (fewest-remaining-neighbours first, dead-end and
/// connectivity pruning). nullopt when none exists.
std::optional<std::vector<int>> hamiltonian_path(const AdjacencyGraph& g, int from, int to);

/// True iff `path` is a Hamiltonian path of g from `from` to `to`.
bool is_hamiltonian_path(const AdjacencyGraph& g, const std::vector<int>& path, int from, int to);

}  // namespace bg

#endif  // BG_HAMILTON_HPP
