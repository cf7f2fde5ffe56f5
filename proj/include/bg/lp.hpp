#ifndef BG_LP_HPP
#define BG_LP_HPP

#include <utility>
#include <vector>

#include "bg/game.hpp"
#include "bg/linalg.hpp"

namespace bg {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational objective;
  Vector x;
};

/// Exact two-phase tableau simplex with Bland's rule:
///   maximize c.x  subject to  A x = b,  x >= 0.
/// Rows with negative right-hand side are negated internally.
LpResult maximize(const Matrix& a, const Vector& b, const Vector& c);

/// Optimum of the Bondareva-Shapley program
///   max sum_S y_S v(S)  s.t.  sum_{S contains i} y_S = 1 (all i),  y >= 0,
/// over proper coalitions S. Solved with a revised simplex over the n x n
/// basis, pricing all 2^n - 2 columns per iteration, starting from the
/// singleton partition.
struct BalancingProgram {
  Rational value;
  /// Optimal basic y restricted to its positive entries, ascending mask order.
  std::vector<std::pair<Coalition, Rational>> support;
  /// Optimal dual pi: pi(S) >= v(S) for every proper S and pi(N) = value.
  Vector duals;
  int pivots = 0;
};
BalancingProgram solve_balancing_program(const Game& v);

}  // namespace bg

#endif  // BG_LP_HPP
