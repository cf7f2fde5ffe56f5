#include "bg/sampler.hpp"

#include <algorithm>
#include <stdexcept>

#include "bg/counting.hpp"

namespace bg {

BigInt uniform_below(const BigInt& bound, Rng& rng) {
  if (bound <= 0) throw std::invalid_argument("empty sampling range");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - 64 * (words - 1));
  for (;;) {
    BigInt candidate = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = rng();
      if (w == 0 && top_bits < 64) word &= (std::uint64_t{1} << top_bits) - 1;
      BigInt part;
      mpz_import(part.get_mpz_t(), 1, 1, sizeof word, 0, 0, &word);
      candidate = (candidate << 64) + part;
    }
    if (candidate < bound) return candidate;
  }
}

namespace {

// Proper nonempty subsets of `rest`, each kept with probability 1/2.
std::vector<Coalition> random_family(Coalition rest, Rng& rng) {
  std::vector<Coalition> out;
  std::uint64_t word = 0;
  int left = 0;
  for_each_nonempty_subset(rest, [&](Coalition a) {
    if (a == rest) return;
    if (left == 0) {
      word = rng();
      left = 64;
    }
    if (word & 1u) out.push_back(a);
    word >>= 1;
    --left;
  });
  return out;
}

Coalition random_k_subset(int n, int k, Rng& rng) {
  std::vector<int> players(n);
  for (int i = 0; i < n; ++i) players[i] = i + 1;
  // partial Fisher-Yates with exact uniform draws
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(players[i], players[pick(rng)]);
  }
  return Coalition::of(std::vector<int>(players.begin(), players.begin() + k));
}

}  // namespace

VertexCollection sample_vertex(int n, Rng& rng) {
  check_player_count(n);
  const CountTable c = count_table(n);
  if (uniform_below(c.b[n], rng) == 0) return VertexCollection(n, {});

  // |intersection| = k with weight C(n,k) (s_{n-k} + t_{n-k}); the weights sum to f_n
  BigInt draw = uniform_below(c.f[n], rng);
  int k = 1;
  for (;; ++k) {
    BigInt weight;
    mpz_bin_uiui(weight.get_mpz_t(), n, k);
    weight *= c.s[n - k] + c.t[n - k];
    if (draw < weight) break;
    draw -= weight;
  }
  const int m = n - k;
  const Coalition meet = random_k_subset(n, k, rng);
  const Coalition rest = meet.complement(n);

  std::vector<Coalition> sets;
  if (uniform_below(c.s[m] + c.t[m], rng) < c.t[m]) {
    sets.push_back(meet);
    for (Coalition a : random_family(rest, rng)) sets.push_back(meet | a);
  } else if (m == 2) {
    // the only family on two players with empty intersection
    for (int p : rest.players()) sets.push_back(meet | Coalition::singleton(p));
  } else {
    for (;;) {
      std::vector<Coalition> family = random_family(rest, rng);
      Coalition common = rest;
      for (Coalition a : family) common = common & a;
      if (family.empty() || !common.empty()) continue;
      for (Coalition a : family) sets.push_back(meet | a);
      break;
    }
  }
  return VertexCollection(n, std::move(sets));
}

}  // namespace bg
