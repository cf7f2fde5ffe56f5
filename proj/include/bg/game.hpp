#ifndef BG_GAME_HPP
#define BG_GAME_HPP

#include <functional>
#include <vector>

#include "bg/coalition.hpp"
#include "bg/rational.hpp"

namespace bg {

/// A TU-game on players {1..n}: one exact value per nonempty coalition,
/// v(empty) = 0. Values are stored by mask, so index 0 is the empty coalition.
class Game {
 public:
  /// The zero game.
  explicit Game(int n);
  /// `values` has 2^n entries indexed by mask; entry 0 must be zero.
  Game(int n, std::vector<Rational> values);
  /// Evaluates `fn` on every nonempty coalition.
  static Game from_function(int n, const std::function<Rational(Coalition)>& fn);

  int players() const { return n_; }
  const Rational& operator()(Coalition s) const { return values_[s.mask()]; }
  const Rational& grand_value() const { return values_.back(); }
  const std::vector<Rational>& values() const { return values_; }

  /// Copy with one coalition changed.
  Game with(Coalition s, const Rational& value) const;

  Game operator+(const Game& o) const;
  Game operator-(const Game& o) const;
  Game operator-() const;
  Game operator*(const Rational& k) const;

  bool is_zero_one() const;
  bool operator==(const Game& o) const { return n_ == o.n_ && values_ == o.values_; }

 private:
  int n_;
  std::vector<Rational> values_;
};

inline Game operator*(const Rational& k, const Game& v) { return v * k; }

/// Payment vector x, one entry per player (x[0] belongs to player 1).
struct Allocation {
  std::vector<Rational> x;

  /// x(S) = sum of x_i over i in S.
  Rational operator()(Coalition s) const;
  int players() const { return static_cast<int>(x.size()); }
  bool operator==(const Allocation&) const = default;
};

/// Unit vector 1^{i}.
Allocation unit_allocation(int n, int player);

/// x(S) >= v(S) for all S and x(N) = v(N).
bool in_core(const Game& v, const Allocation& x);

/// delta_S: 1 on S, 0 elsewhere.
Game dirac(int n, Coalition s);
/// u_S: 1 on supersets of S.
Game unanimity(int n, Coalition s);
/// d_D: the 0-1 game equal to 1 exactly on D and on N. Members of D must be
/// proper nonempty coalitions.
Game from_collection(int n, const std::vector<Coalition>& collection);

struct SimpleProper {
  bool simple = false;  ///< 0-1 valued and monotone
  bool proper = false;  ///< no S with v(S) = v(N\S) = 1
};
SimpleProper is_simple_proper(const Game& v);

}  // namespace bg

#endif  // BG_GAME_HPP
