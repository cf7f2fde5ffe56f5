#include "bg/balance.hpp"

#include <limits>

#include "bg/lp.hpp"
#include "bg/parallel.hpp"

namespace bg {

BalancednessVerdict is_balanced_lp(const Game& v) {
  const BalancingProgram prog = solve_balancing_program(v);
  BalancednessVerdict out;
  const Rational gap = prog.value - v.grand_value();
  if (gap <= 0) {
    // pi dominates v on every coalition; put the leftover on player 1
    Allocation x{prog.duals};
    x.x[0] -= gap;
    out.balanced = true;
    out.witness = std::move(x);
    return out;
  }
  BalancedCollection b;
  for (const auto& [s, w] : prog.support) {
    b.sets.push_back(s);
    b.weights.push_back(w);
  }
  out.violation = std::move(b);
  out.slack = gap;
  return out;
}

BalancednessVerdict is_balanced_mbc(const Game& v, bool allow_large) {
  const auto& list = mbc_list(v.players(), allow_large);
  const long long count = static_cast<long long>(list.size());
  long long first = std::numeric_limits<long long>::max();
#pragma omp parallel for reduction(min : first) num_threads(par::max_threads())
  for (long long k = 0; k < count; ++k) {
    if (k < first && list[k].weighted_value(v) > v.grand_value()) first = k;
  }
  if (first == std::numeric_limits<long long>::max()) {
    BalancednessVerdict out = is_balanced_lp(v);
    if (!out.balanced) throw std::logic_error("balancedness routes disagree");
    return out;
  }
  BalancednessVerdict out;
  out.violation = list[first];
  out.slack = list[first].weighted_value(v) - v.grand_value();
  return out;
}

}  // namespace bg
