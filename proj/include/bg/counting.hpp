#ifndef BG_COUNTING_HPP
#define BG_COUNTING_HPP

#include <optional>
#include <vector>

#include "bg/rational.hpp"

namespace bg {

/// Exact counts indexed by k = 1..n (index 0 unused):
///   t_k  all families of proper nonempty subsets of a k-set, 2^{2^k - 2}
///   f_k  nonempty families with nonempty intersection
///   s_k  nonempty families with empty intersection
///   b_k  vertices of BG_+(k), f_k + 1
struct CountTable {
  int n = 0;
  std::vector<BigInt> t, s, f, b;
};

/// t_k has 2^k - 1 bits, so n is capped.
inline constexpr int kCountCap = 20;

/// Throws std::out_of_range outside 1..kCountCap.
CountTable count_table(int n);

/// Branch probabilities of the uniform vertex sampler for BG_+(n).
struct SamplerProbabilities {
  int n = 0;
  Rational p0;             ///< 1 / (1 + f_n): draw u_N
  std::vector<Rational> p1;  ///< p1[k], k = 1..n-1: |intersection| = k
  std::vector<Rational> p2;  ///< p2[m], m = 1..n: t_m / (s_m + t_m)
};

/// Throws std::out_of_range outside 1..kCountCap.
SamplerProbabilities sampler_probabilities(int n);

/// Product of the sampler's branch probabilities for one vertex whose
/// intersection S has |S| = k, with S in D (`contains_meet`) or not. Equals
/// 1/b_n. nullopt when the branch cannot occur (S not in D with s_{n-k} = 0).
std::optional<Rational> path_probability(int n, int k, bool contains_meet);

}  // namespace bg

#endif  // BG_COUNTING_HPP
