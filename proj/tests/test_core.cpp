#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "bg/adjacency.hpp"
#include "bg/balance.hpp"
#include "bg/core.hpp"
#include "bg/vertices.hpp"
#include "oracles.hpp"

using namespace bg;

namespace {

Coalition c(std::initializer_list<int> p) { return Coalition::of(p); }

BalancedCollection mbc_of(int n, std::vector<Coalition> sets) {
  const auto w = solve_weights(n, sets);
  REQUIRE(w.verdict == WeightVerdict::minimal);
  return w.collection;
}

// Every basis of n constraints (efficiency plus n - 1 others): solve, keep
// the feasible points. Exhaustive, no pre-filter.
std::set<Vector> brute_core_vertices(const Game& v) {
  const int n = v.players();
  std::set<Vector> out;
  const auto cands = proper_coalitions(n);
  std::vector<int> idx(n - 1);
  auto rec = [&](auto&& self, int depth, int start) -> void {
    if (depth == n - 1) {
      Matrix a{characteristic(n, Coalition::grand(n))};
      Vector b{v.grand_value()};
      for (int k : idx) {
        a.push_back(characteristic(n, cands[k]));
        b.push_back(v(cands[k]));
      }
      auto x = solve_unique(a, b);
      if (x && in_core(v, Allocation{*x})) out.insert(*x);
      return;
    }
    for (int k = start; k < static_cast<int>(cands.size()); ++k) {
      idx[depth] = k;
      self(self, depth + 1, k + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

Game random_balanced(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(0, 6);
  for (;;) {
    Game v = Game::from_function(n, [&](Coalition) { return Rational(num(rng), 6); });
    v = v.with(Coalition::grand(n), Rational(num(rng) + 6, 6));
    if (is_balanced_lp(v).balanced) return v;
  }
}

}  // namespace

TEST_CASE("core_vertices examples") {
  const auto un = core_vertices(unanimity(3, Coalition::grand(3)));
  CHECK(un.vertices.size() == 3);
  CHECK(un.dimension == 2);
  const auto vee = core_vertices(from_collection(3, {c({1, 2}), c({1, 3})}));
  REQUIRE(vee.vertices.size() == 1);
  CHECK(vee.vertices[0].x == Vector{1, 0, 0});
  CHECK(vee.dimension == 0);
  const auto empty = core_vertices(dirac(3, c({1, 2})));
  CHECK(empty.vertices.empty());
  CHECK(empty.dimension == -1);
}

TEST_CASE("core vertices against exhaustive bases") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 2;
    const Game v = random_balanced(n, rng);
    const auto got = core_vertices(v).vertices;
    const auto expected = brute_core_vertices(v);
    CHECK(std::set<Vector>([&] {
            std::set<Vector> s;
            for (const auto& a : got) s.insert(a.x);
            return s;
          }()) == expected);
    std::vector<Vector> serial;
    for (const auto& a : core_vertices_serial(v)) serial.push_back(a.x);
    CHECK(serial == std::vector<Vector>(expected.begin(), expected.end()));
  }
}

TEST_CASE("effective coalitions") {
  const Game v = Game(3).with(c({1}), Rational(1, 2)).with(c({2, 3}), Rational(1, 2)).with(Coalition::grand(3), 1);
  const std::vector<Coalition> expected{c({1}), c({2, 3}), Coalition::grand(3)};
  CHECK(effective_coalitions(v) == expected);
  CHECK(effective_coalitions_lp(v) == expected);

  const Game interior = Game(3).with(Coalition::grand(3), 1);
  CHECK(effective_coalitions(interior) == std::vector<Coalition>{Coalition::grand(3)});

  const Game d1 = from_collection(3, {c({1})});
  // core {(1,0,0)}: tight on 1, 2, 3, 23
  const std::vector<Coalition> with1{c({1}), c({2}), c({3}), c({2, 3}), Coalition::grand(3)};
  CHECK(effective_coalitions(d1) == with1);
  CHECK(effective_coalitions_lp(d1) == with1);
  CHECK_THROWS_AS(effective_coalitions(dirac(3, c({1, 2}))), std::invalid_argument);
}

TEST_CASE("effective coalitions: both routes agree") {
  for (const auto& d : enumerate_vertices(3)) CHECK(effective_coalitions(d.game()) == effective_coalitions_lp(d.game()));
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Game v = random_balanced(4, rng);
    CHECK(effective_coalitions(v) == effective_coalitions_lp(v));
  }
}

TEST_CASE("point cores") {
  const Rational third(1, 3);
  const Game v = Game::from_function(3, [&](Coalition s) -> Rational { return s.size() == 3 ? Rational(1) : third; });
  const auto p = has_point_core(v);
  CHECK(p.point);
  CHECK(p.x->x == Vector{third, third, third});
  CHECK_FALSE(has_point_core(unanimity(3, c({1, 2}))).point);
  for (int i = 1; i <= 3; ++i) {
    const auto w = has_point_core(unanimity(3, Coalition::singleton(i)));
    CHECK(w.point);
    CHECK(w.x->x == characteristic(3, Coalition::singleton(i)));
  }
  CHECK_THROWS(has_point_core(dirac(3, c({1, 2}))));
}

TEST_CASE("point core iff one core vertex") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Game v = random_balanced(3 + trial % 2, rng);
    CHECK(has_point_core(v).point == (core_vertices(v).vertices.size() == 1));
  }
}

TEST_CASE("face_point_core_rank") {
  const auto b1 = mbc_of(4, {c({1, 2}), c({3, 4})});
  const auto b2 = mbc_of(4, {c({1}), c({2, 3, 4})});
  const auto b3 = mbc_of(4, {c({1, 3}), c({1, 2, 4}), c({2, 3, 4})});
  CHECK_FALSE(face_point_core_rank(4, {b1, b2}));
  CHECK(face_point_core_rank(4, {b1, b3}));
  CHECK(face_point_core_rank(4, {mbc_of(4, {c({1}), c({2}), c({3}), c({4})})}));
  CHECK_THROWS(face_point_core_rank(4, {}));
  BalancedCollection fake{{c({1, 2})}, {1}};
  CHECK_THROWS(face_point_core_rank(4, {fake}));
}

TEST_CASE("face rank predicts point cores of interior face games") {
  // a game on the relative interior of the face of b1, b3 at n = 4
  const auto b1 = mbc_of(4, {c({1, 2}), c({3, 4})});
  const auto b3 = mbc_of(4, {c({1, 3}), c({1, 2, 4}), c({2, 3, 4})});
  const Allocation x{{Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)}};
  std::set<Coalition> tight{b1.sets.begin(), b1.sets.end()};
  tight.insert(b3.sets.begin(), b3.sets.end());
  const Game v = Game::from_function(4, [&](Coalition s) -> Rational {
    if (s.size() == 4 || tight.count(s)) return x(s);
    return x(s) - 1;
  });
  CHECK(has_point_core(v).point);
}

TEST_CASE("edge point cores") {
  const VertexCollection u1(3, {c({1}), c({1, 2}), c({1, 3})}), d112(3, {c({1}), c({1, 2})});
  const auto r = edge_point_core_check(u1, d112, Rational(1, 2));
  CHECK(r.point_core);
  CHECK(r.predicted == std::optional<bool>(true));
  CHECK(r.agrees);

  const VertexCollection e1(5, {c({1, 3}), c({1, 4}), c({1, 5})});
  const VertexCollection e2(5, {c({2, 3, 4}), c({2, 4, 5}), c({2, 3, 5})});
  const auto five = edge_point_core_check(e1, e2, Rational(1, 2));
  CHECK_FALSE(five.point_core);
  CHECK(five.dimension >= 1);
  CHECK_FALSE(five.predicted);
  const Game mid = e1.game() * Rational(1, 2) + e2.game() * Rational(1, 2);
  CHECK(in_core(mid, Allocation{{Rational(1, 4), 0, Rational(1, 4), Rational(1, 4), Rational(1, 4)}}));
  CHECK(in_core(mid, Allocation{{Rational(1, 2), Rational(1, 2), 0, 0, 0}}));

  CHECK_THROWS(edge_point_core_check(u1, VertexCollection(3, {c({2, 3})}), Rational(1, 2)));
  CHECK_THROWS(edge_point_core_check(u1, d112, Rational(1)));
}

TEST_CASE("edge point cores at n = 4 for distinct singleton intersections") {
  const auto vs = enumerate_vertices(4);
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 60) {
    const auto& a = vs[rng() % vs.size()];
    const auto& b = vs[rng() % vs.size()];
    if (a == b || a.empty() || b.empty()) continue;
    if (a.intersection().size() != 1 || b.intersection().size() != 1 || a.intersection() == b.intersection()) continue;
    if (!are_adjacent(a, b)) continue;
    const auto r = edge_point_core_check(a, b, Rational(1, 3));
    CHECK(r.point_core);
    CHECK(r.agrees);
    ++checked;
  }
}
