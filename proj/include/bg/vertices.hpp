#ifndef BG_VERTICES_HPP
#define BG_VERTICES_HPP

#include <string>
#include <vector>

#include "bg/coalition.hpp"
#include "bg/game.hpp"

namespace bg {

/// A family D of proper nonempty coalitions, identified with the 0-1 game d_D
/// (1 exactly on D and N). It is a vertex of BG_+(n) iff D is empty or the
/// members share a player. Members are kept in ascending mask order.
class VertexCollection {
 public:
  VertexCollection() = default;
  /// Throws std::invalid_argument on a member that is not a proper nonempty
  /// coalition of 1..n, or on duplicates. Does not require the vertex condition.
  VertexCollection(int n, std::vector<Coalition> sets);

  int players() const { return n_; }
  const std::vector<Coalition>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  bool contains(Coalition s) const;

  /// Intersection of the members; N for the empty family.
  Coalition intersection() const;
  bool is_vertex() const { return sets_.empty() || !intersection().empty(); }

  Game game() const { return from_collection(n_, sets_); }

  /// "{1,12}" style; "{}" for the empty family.
  std::string label() const;
  /// u_S, u_S∨u_T or d_{...} naming (u_N for the empty family).
  std::string name() const;

  bool operator==(const VertexCollection&) const = default;

 private:
  int n_ = 1;
  std::vector<Coalition> sets_;
};

/// By size, then lexicographic on the ascending member masks.
bool canonical_less(const VertexCollection& a, const VertexCollection& b);

bool is_vertex(int n, const std::vector<Coalition>& sets);

/// The family of a 0-1 game with v(N) = 1. Throws std::invalid_argument otherwise.
VertexCollection collection_of(const Game& v);

/// Largest n enumerated without / with the explicit opt-in.
inline constexpr int kVertexDefaultCap = 4;
inline constexpr int kVertexLargeCap = 5;

/// All vertices of BG_+(n) in canonical order (u_N first). Throws
/// std::out_of_range above the cap.
std::vector<VertexCollection> enumerate_vertices(int n, bool allow_large = false);

}  // namespace bg

#endif  // BG_VERTICES_HPP
