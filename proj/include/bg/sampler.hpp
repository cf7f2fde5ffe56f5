#ifndef BG_SAMPLER_HPP
#define BG_SAMPLER_HPP

#include <random>

#include "bg/rational.hpp"
#include "bg/vertices.hpp"

namespace bg {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection on 64-bit words. bound > 0.
BigInt uniform_below(const BigInt& bound, Rng& rng);

/// One vertex of BG_+(n), each with probability exactly 1/b_n. Families with
/// empty intersection are drawn by rejection from uniform random families.
VertexCollection sample_vertex(int n, Rng& rng);

}  // namespace bg

#endif  // BG_SAMPLER_HPP
