#ifndef BG_CORE_HPP
#define BG_CORE_HPP

#include <optional>
#include <vector>

#include "bg/game.hpp"
#include "bg/linalg.hpp"
#include "bg/mbc.hpp"

namespace bg {

struct CoreDescription {
  std::vector<Allocation> vertices;  ///< lexicographically sorted
  int dimension = -1;                ///< -1 for an empty core
  /// Coalitions S with x(S) = v(S) on the whole core (ascending); empty for an empty core.
  std::vector<Coalition> effective;
};

/// Linear optimisation over C(v). The core is bounded, so every objective is
/// attained whenever the core is nonempty.
class CoreProgram {
 public:
  explicit CoreProgram(const Game& v);

  bool feasible() const { return feasible_; }
  /// min of c.x over the core; nullopt when the core is empty.
  std::optional<Rational> minimize(const Vector& c) const;
  std::optional<Rational> maximize(const Vector& c) const;
  /// Some core element.
  std::optional<Allocation> point() const { return point_; }

 private:
  int n_;
  Matrix a_;
  Vector b_;
  Vector lower_;  // x_i = v({i}) + y_i
  bool feasible_ = false;
  std::optional<Allocation> point_;
};

/// Extreme points of C(v) with dimension and effective coalitions. Vertices are
/// found by enumerating bases among the constraints that are tight somewhere
/// on the core. Parallel over the leading constraint when built with OpenMP.
CoreDescription core_vertices(const Game& v);

/// Single-threaded reference vertex enumeration (same vertex list).
std::vector<Allocation> core_vertices_serial(const Game& v);

/// Effective coalitions as the union of the tight minimal balanced
/// collections plus N. Throws std::invalid_argument for unbalanced games and
/// std::out_of_range beyond the enumeration cap.
std::vector<Coalition> effective_coalitions(const Game& v, bool allow_large = false);

/// Same set from the definition: S is effective iff min over the core of x(S) equals v(S).
std::vector<Coalition> effective_coalitions_lp(const Game& v);

struct PointCore {
  bool point = false;
  std::optional<Allocation> x;  ///< the unique core element when `point`
};

/// Decides |C(v)| = 1 by minimising and maximising every coordinate.
/// Throws std::invalid_argument for unbalanced games.
PointCore has_point_core(const Game& v);

/// True iff the characteristic vectors of all sets in the given minimal
/// balanced collections have rank n. Throws std::invalid_argument if a
/// collection is not minimal balanced or the list is empty.
bool face_point_core_rank(int n, const std::vector<BalancedCollection>& mbcs);

}  // namespace bg

#endif  // BG_CORE_HPP
