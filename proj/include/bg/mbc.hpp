#ifndef BG_MBC_HPP
#define BG_MBC_HPP

#include <vector>

#include "bg/coalition.hpp"
#include "bg/game.hpp"
#include "bg/rational.hpp"

namespace bg {

/// Coalitions with positive weights such that every player's weights sum to 1.
struct BalancedCollection {
  std::vector<Coalition> sets;
  std::vector<Rational> weights;  ///< parallel to `sets`

  std::size_t size() const { return sets.size(); }
  /// sum_S lambda_S v(S)
  Rational weighted_value(const Game& v) const;
  Rational weight_sum() const;
  /// "{12,13,23}" style label.
  std::string label() const;
  bool operator==(const BalancedCollection&) const = default;
};

enum class WeightVerdict { minimal, balanced_not_minimal, not_balanced };

struct WeightSolution {
  WeightVerdict verdict = WeightVerdict::not_balanced;
  /// The collection with its unique weights; set only for `minimal`.
  BalancedCollection collection;
};

/// Decides whether `sets` is a minimal balanced collection and, if so,
/// returns its unique balancing weights (sets are kept in the given order).
/// Throws std::invalid_argument on duplicates, the empty set or N.
WeightSolution solve_weights(int n, const std::vector<Coalition>& sets);

/// Largest n enumerated without an explicit opt-in.
inline constexpr int kMbcDefaultCap = 5;
inline constexpr int kMbcLargeCap = 6;

/// All minimal balanced collections on n players except {N}, each with its
/// weights, in canonical order (by size, then lexicographic on the ascending
/// member masks). Throws std::out_of_range outside 2..5 (2..6 with
/// `allow_large`). Runs in parallel when built with OpenMP.
std::vector<BalancedCollection> enumerate_mbc(int n, bool allow_large = false);

/// Single-threaded reference enumeration (same output).
std::vector<BalancedCollection> enumerate_mbc_serial(int n, bool allow_large = false);

/// Shared, lazily computed enumerate_mbc(n) for the default cap (n <= 5;
/// n = 6 requires allow_large). Thread-safe.
const std::vector<BalancedCollection>& mbc_list(int n, bool allow_large = false);

/// The complementary collection {N \ S} with weights
/// lambda_{N\S} / (sum lambda - 1). Throws std::invalid_argument when the
/// weight sum is 1.
BalancedCollection complement(int n, const BalancedCollection& b);

/// N^perp plus {S, (N\S)^perp} for every S with 1 < |S| < n, all weights 1.
std::vector<BalancedCollection> special_partitions(int n);

/// Canonical ordering used for enumerations.
bool canonical_less(const BalancedCollection& a, const BalancedCollection& b);
/// Sorts sets ascending (weights follow).
BalancedCollection sorted_by_mask(BalancedCollection b);

}  // namespace bg

#endif  // BG_MBC_HPP
