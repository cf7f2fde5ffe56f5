#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bg/balance.hpp"
#include "bg/linalg.hpp"
#include "bg/vertices.hpp"

using namespace bg;

namespace {

Game random_game(int n, std::mt19937_64& rng, int spread = 10) {
  std::uniform_int_distribution<int> num(-spread, spread);
  return Game::from_function(n, [&](Coalition) { return Rational(num(rng), spread); });
}

void check_witness(const Game& v, const BalancednessVerdict& r) {
  if (r.balanced) {
    REQUIRE(r.witness);
    CHECK_FALSE(r.violation);
    CHECK(in_core(v, *r.witness));
  } else {
    REQUIRE(r.violation);
    CHECK_FALSE(r.witness);
    CHECK(r.slack > 0);
    CHECK(r.violation->weighted_value(v) - v.grand_value() == r.slack);
    CHECK(solve_weights(v.players(), r.violation->sets).verdict == WeightVerdict::minimal);
  }
}

}  // namespace

TEST_CASE("triangle game violates the pair collection") {
  const Game v = Game::from_function(3, [](Coalition s) -> Rational { return s.size() >= 2 ? 1 : 0; });
  const auto r = is_balanced_mbc(v);
  CHECK_FALSE(r.balanced);
  REQUIRE(r.violation);
  CHECK(r.violation->label() == "{12,13,23}");
  CHECK(r.slack == Rational(1, 2));
  CHECK_FALSE(is_balanced_lp(v).balanced);
}

TEST_CASE("examples") {
  const auto u1 = is_balanced_mbc(unanimity(3, Coalition::of({1})));
  CHECK(u1.balanced);
  CHECK(u1.witness->x == Vector{1, 0, 0});
  CHECK_FALSE(is_balanced_mbc(dirac(3, Coalition::of({1, 2}))).balanced);
  const auto zero = is_balanced_lp(Game(3));
  CHECK(zero.balanced);
  CHECK(zero.witness->x == Vector{0, 0, 0});
  CHECK(is_balanced_lp(unanimity(5, Coalition::of({1, 2}))).balanced);
  CHECK(is_balanced_lp(Game(1, {0, Rational(-3)})).balanced);
}

TEST_CASE("routes agree with valid certificates") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    const Game v = random_game(n, rng);
    const auto a = is_balanced_mbc(v), b = is_balanced_lp(v);
    CHECK(a.balanced == b.balanced);
    check_witness(v, a);
    check_witness(v, b);
  }
}

TEST_CASE("vertices of BG_+(3) are balanced, other 0-1 games are not") {
  for (std::uint32_t bits = 0; bits < 64; ++bits) {
    std::vector<Coalition> family;
    for (int k = 0; k < 6; ++k) {
      if (bits >> k & 1u) family.push_back(Coalition(static_cast<std::uint32_t>(k + 1)));
    }
    const VertexCollection d(3, family);
    CHECK(is_balanced_lp(d.game()).balanced == d.is_vertex());
  }
}

TEST_CASE("scale covariance and normalisation") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(0, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const Game v = Game::from_function(3, [&](Coalition s) -> Rational { return s.size() == 3 ? Rational(num(rng) + 1) : Rational(num(rng), 4); });
    const bool bal = is_balanced_lp(v).balanced;
    CHECK(is_balanced_lp(v * Rational(5, 3)).balanced == bal);
    CHECK(is_balanced_lp(v * (Rational(1) / v.grand_value())).balanced == bal);
    CHECK(is_balanced_lp(v * Rational(0)).balanced);
  }
}

TEST_CASE("mbc route is capped") { CHECK_THROWS_AS(is_balanced_mbc(Game(6)), std::out_of_range); }
