#ifndef BG_BALANCE_HPP
#define BG_BALANCE_HPP

#include <optional>

#include "bg/game.hpp"
#include "bg/mbc.hpp"

namespace bg {

struct BalancednessVerdict {
  bool balanced = false;
  /// A core element, present iff balanced.
  std::optional<Allocation> witness;
  /// A minimal balanced collection with sum lambda_S v(S) > v(N), present iff not balanced.
  std::optional<BalancedCollection> violation;
  /// sum lambda_S v(S) - v(N) for the violation (positive), zero otherwise.
  Rational slack;
};

/// Scans every minimal balanced collection in canonical order and reports the
/// first violated inequality. The witness for balanced games comes from the LP.
/// Throws std::out_of_range beyond the enumeration cap.
BalancednessVerdict is_balanced_mbc(const Game& v, bool allow_large = false);

/// Exact LP test valid for any n. A violation, when reported, is the optimal
/// basic support of the balancing program, itself a minimal balanced collection.
BalancednessVerdict is_balanced_lp(const Game& v);

}  // namespace bg

#endif  // BG_BALANCE_HPP
