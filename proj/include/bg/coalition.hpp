#ifndef BG_COALITION_HPP
#define BG_COALITION_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bg {

/// Largest supported player count. Enumeration workloads stop far below this.
inline constexpr int kMaxPlayers = 16;

/// Throws std::invalid_argument unless 1 <= n <= kMaxPlayers.
void check_player_count(int n);

/// A subset of the players {1..n}. Player i is stored in bit i-1, so the
/// canonical coalition order is ascending mask value.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t mask) : mask_(mask) {}

  /// Builds a coalition from 1-based player labels.
  static Coalition of(std::initializer_list<int> players);
  static Coalition of(const std::vector<int>& players);
  static constexpr Coalition grand(int n) { return Coalition((n >= 32 ? 0u : (1u << n)) - 1u); }
  static constexpr Coalition singleton(int player) { return Coalition(1u << (player - 1)); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int player) const { return (mask_ >> (player - 1)) & 1u; }
  constexpr bool subset_of(Coalition other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool fits(int n) const { return subset_of(grand(n)); }
  /// Lowest player label; undefined for the empty coalition.
  constexpr int first() const { return std::countr_zero(mask_) + 1; }

  constexpr Coalition complement(int n) const { return Coalition(grand(n).mask_ & ~mask_); }
  constexpr Coalition operator|(Coalition o) const { return Coalition(mask_ | o.mask_); }
  constexpr Coalition operator&(Coalition o) const { return Coalition(mask_ & o.mask_); }
  constexpr Coalition operator-(Coalition o) const { return Coalition(mask_ & ~o.mask_); }

  std::vector<int> players() const;

  /// "1,2,3" (ascending labels, comma separated). Used as the JSON key format.
  std::string to_key() const;
  /// "123" for n <= 9, otherwise the key form. Matches the compact table notation.
  std::string to_compact() const;

  constexpr auto operator<=>(const Coalition&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Parses "1,2,3" (the JSON key form). Throws std::invalid_argument.
Coalition parse_coalition_key(const std::string& key, int n);

/// Every nonempty coalition except N, in canonical (ascending mask) order.
std::vector<Coalition> proper_coalitions(int n);

/// Iterates the nonempty submasks of `set`, ascending.
template <typename Fn>
void for_each_nonempty_subset(Coalition set, Fn&& fn) {
  const std::uint32_t full = set.mask();
  std::uint32_t sub = 0;
  do {
    sub = (sub - full) & full;
    if (sub != 0) fn(Coalition(sub));
  } while (sub != 0);
}

}  // namespace bg

#endif  // BG_COALITION_HPP
