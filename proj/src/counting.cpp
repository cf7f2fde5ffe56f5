#include "bg/counting.hpp"

#include <stdexcept>
#include <string>

namespace bg {

namespace {

void check_range(int n) {
  if (n < 1 || n > kCountCap) {
    throw std::out_of_range("counts supported for n in 1.." + std::to_string(kCountCap) + ", got " + std::to_string(n));
  }
}

BigInt pow2(unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

BigInt binomial(int n, int k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

CountTable count_table(int n) {
  check_range(n);
  CountTable c;
  c.n = n;
  c.t.resize(n + 1);
  c.s.resize(n + 1);
  c.f.resize(n + 1);
  c.b.resize(n + 1);
  for (int k = 1; k <= n; ++k) {
    c.t[k] = pow2((1ul << k) - 2);
    BigInt f = 0;
    for (int j = 1; j < k; ++j) f += binomial(k, j) * (pow2((1ul << j) - 1) - c.f[j] - 1);
    c.f[k] = f;
    c.s[k] = c.t[k] - f - 1;
    c.b[k] = f + 1;
  }
  return c;
}

SamplerProbabilities sampler_probabilities(int n) {
  const CountTable c = count_table(n);
  SamplerProbabilities p;
  p.n = n;
  p.p0 = Rational(1) / Rational(c.b[n]);
  p.p1.assign(n, Rational(0));
  for (int k = 1; k < n; ++k) {
    Rational q(binomial(n, k) * (c.s[n - k] + c.t[n - k]), c.f[n]);
    q.canonicalize();
    p.p1[k] = q;
  }
  p.p2.assign(n + 1, Rational(0));
  for (int m = 1; m <= n; ++m) {
    Rational q(c.t[m], c.s[m] + c.t[m]);
    q.canonicalize();
    p.p2[m] = q;
  }
  return p;
}

std::optional<Rational> path_probability(int n, int k, bool contains_meet) {
  if (k < 1 || k >= n) throw std::invalid_argument("intersection size must be in 1..n-1");
  const CountTable c = count_table(n);
  const SamplerProbabilities p = sampler_probabilities(n);
  const int m = n - k;
  if (!contains_meet && c.s[m] == 0) return std::nullopt;
  Rational out = (1 - p.p0) * p.p1[k] / Rational(binomial(n, k));
  if (contains_meet) {
    out *= p.p2[m] / Rational(c.t[m]);
  } else {
    out *= (1 - p.p2[m]) / Rational(c.s[m]);
  }
  return out;
}

}  // namespace bg
