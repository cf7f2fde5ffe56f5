#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bg/balance.hpp"
#include "bg/cones.hpp"
#include "bg/core.hpp"
#include "bg/mbc.hpp"
#include "oracles.hpp"

using namespace bg;

namespace {

Game game_of(int n, const std::vector<oracle::Q>& v) {
  return Game::from_function(n, [&](Coalition s) { return Rational(v[s.mask()]); });
}

Game random_game(int n, std::mt19937_64& rng, int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 4);
  return Game::from_function(n, [&](Coalition) { return Rational(num(rng), den(rng)); });
}

}  // namespace

TEST_CASE("equality on special partitions forces equality on every m.b.c.") {
  std::mt19937_64 rng(53);
  for (int n = 3; n <= 4; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      const Game v = game_of(n, oracle::special_partition_game(n, rng));
      for (const auto& p : special_partitions(n)) REQUIRE(p.weighted_value(v) == v.grand_value());
      for (const auto& b : mbc_list(n)) CHECK(b.weighted_value(v) == v.grand_value());
    }
  }
}

TEST_CASE("constructed games are additive") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    const Game v = game_of(4, oracle::special_partition_game(4, rng));
    for (Coalition s : proper_coalitions(4)) {
      Rational sum = 0;
      for (int i = 1; i <= 4; ++i) {
        if (s.contains(i)) sum += v(Coalition::singleton(i));
      }
      CHECK(v(s) == sum);
    }
  }
}

TEST_CASE("routes agree on random games") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    const Game v = random_game(n, rng);
    CHECK(is_balanced_lp(v).balanced == is_balanced_mbc(v).balanced);
  }
}

TEST_CASE("balanced iff core nonempty") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const Game v = random_game(3, rng, -2, 3);
    CHECK(is_balanced_lp(v).balanced == CoreProgram(v).feasible());
  }
}

TEST_CASE("adding lineality directions keeps balancedness") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> num(-5, 5);
  const auto basis = lineality_basis_bg(4);
  for (int trial = 0; trial < 100; ++trial) {
    Game v = random_game(4, rng);
    const bool before = is_balanced_lp(v).balanced;
    for (const auto& w : basis) v = v + w.direction * Rational(num(rng), 3);
    CHECK(is_balanced_lp(v).balanced == before);
  }
}

TEST_CASE("sums of balanced games are balanced") {
  std::mt19937_64 rng(73);
  int pairs = 0;
  while (pairs < 100) {
    const Game a = random_game(3, rng, -3, 2), b = random_game(3, rng, -3, 2);
    if (!is_balanced_lp(a).balanced || !is_balanced_lp(b).balanced) continue;
    CHECK(is_balanced_lp(a + b).balanced);
    ++pairs;
  }
}

TEST_CASE("complement weights") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& b : mbc_list(n)) {
      if (b.weight_sum() == 1) continue;
      const auto c = complement(n, b);
      CHECK(solve_weights(n, c.sets).verdict == WeightVerdict::minimal);
      CHECK(sorted_by_mask(complement(n, c)) == sorted_by_mask(b));
    }
  }
}
