#ifndef BG_CONES_HPP
#define BG_CONES_HPP

#include <string>
#include <vector>

#include "bg/game.hpp"
#include "bg/linalg.hpp"
#include "bg/mbc.hpp"

namespace bg {

/// BG(n) lives in R^{2^n - 1} (N included). BG_alpha(n) lives in R^{2^n - 2};
/// its rays are stored as games with v(N) = 0, the cone obtained after
/// translating by alpha u_{n}.
enum class Ambient { bg, bga };

enum class RayKind { lineality_plus, lineality_minus, r_set, r_player };

struct Ray {
  Game direction;
  RayKind kind;
  /// The coalition S of r_S, or the player i of w_i / r_i as a singleton.
  Coalition tag;

  /// "w_1", "-w_2", "r_12", "r_3"
  std::string name() const;
};

/// Coordinates of a game in the ambient space (ascending mask order).
Vector coordinates(const Game& v, Ambient ambient);

/// Lineality dimension: n for BG, n - 1 for BG_alpha.
int lineality_dimension(int n, Ambient ambient);

/// w_i = sum_{S contains i} delta_S, i = 1..n.
std::vector<Ray> lineality_basis_bg(int n);
/// w_i = sum_{S contains i, not n} delta_S - sum_{S contains n, not i} delta_S, i < n.
std::vector<Ray> lineality_basis_bga(int n);

/// +-w_i, then r_S = -delta_S (1 < |S| < n), then r_i. 2^n + 2n - 2 rays.
/// At n = 2 the entries r_1 and r_2 are the same direction.
std::vector<Ray> extremal_rays_bg(int n);
/// +-w_i (i < n), r_S, r_i (i < n) and r_n = -delta_{n}. 2^n + 2n - 4 rays,
/// again with r_1 = r_2 at n = 2.
std::vector<Ray> extremal_rays_bga(int n);

/// Left-hand side of the defining inequality of collection b at v, which is
/// <= 0 on the cone: sum lambda_S v(S) - v(N) for BG, sum lambda_S v(S) for BG_alpha.
Rational row_value(const BalancedCollection& b, const Game& v, Ambient ambient);

/// True iff every defining inequality holds, decided by the balancedness LP
/// (for BG_alpha on the game with v(N) replaced by 0).
bool in_cone(const Game& v, Ambient ambient);

/// Extremality test: the solution space of the inequalities tight at r has
/// dimension lineality + 1. Directions inside the lineality space count as
/// extremal exactly when they are nonzero multiples of +-w_i.
/// Throws std::invalid_argument when r lies outside the cone.
bool verify_extremal(int n, const Game& r, Ambient ambient);

struct FacetTightness {
  BalancedCollection collection;
  bool tight = false;
};
/// Per-collection tightness at v. Throws std::invalid_argument outside the cone.
std::vector<FacetTightness> facet_tightness(const Game& v, Ambient ambient);

/// Facet-ray incidence over the non-lineality extremal rays:
/// cell [f][r] is true when ray r lies on the facet of collection f.
struct IncidenceTable {
  std::vector<BalancedCollection> facets;
  std::vector<Ray> rays;
  std::vector<std::vector<bool>> incident;
};
IncidenceTable incidence_table(int n, Ambient ambient);

/// v = sum_i a_i w_i + sum_S c_S r_S + sum_i c_i r_i with c >= 0 (BG only).
struct ConicDecomposition {
  Vector lineality;                               ///< a_i
  std::vector<std::pair<Coalition, Rational>> set_coefficients;  ///< c_S, 1 < |S| < n
  Vector player_coefficients;                     ///< c_i
};
/// Throws std::invalid_argument for games outside BG(n).
ConicDecomposition decompose_bg(const Game& v);
/// Rebuilds the game from a decomposition.
Game recompose_bg(int n, const ConicDecomposition& d);

}  // namespace bg

#endif  // BG_CONES_HPP
