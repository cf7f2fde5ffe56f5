#include "bg/mbc.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <set>
#include <stdexcept>

#include "bg/linalg.hpp"
#include "bg/lp.hpp"
#include "bg/parallel.hpp"

namespace bg {

Rational BalancedCollection::weighted_value(const Game& v) const {
  Rational total = 0;
  for (std::size_t k = 0; k < sets.size(); ++k) total += weights[k] * v(sets[k]);
  return total;
}

Rational BalancedCollection::weight_sum() const {
  Rational total = 0;
  for (const auto& w : weights) total += w;
  return total;
}

std::string BalancedCollection::label() const {
  std::string out = "{";
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (k) out += ',';
    out += sets[k].to_compact();
  }
  return out + "}";
}

namespace {

void validate_sets(int n, const std::vector<Coalition>& sets) {
  check_player_count(n);
  const Coalition grand = Coalition::grand(n);
  std::set<Coalition> seen;
  for (Coalition s : sets) {
    if (s.empty()) throw std::invalid_argument("collection contains the empty set");
    if (!s.fits(n)) throw std::invalid_argument("coalition " + s.to_key() + " outside the player set");
    if (s == grand) throw std::invalid_argument("collection contains N");
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate coalition " + s.to_key());
  }
}

// Some nonnegative solution of M lambda = 1 with lambda_k > 0, for every k?
bool has_positive_solution(int n, const std::vector<Coalition>& sets) {
  Matrix a(n, Vector(sets.size(), Rational(0)));
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (int p : sets[k].players()) a[p - 1][k] = 1;
  }
  const Vector b(n, Rational(1));
  for (std::size_t k = 0; k < sets.size(); ++k) {
    Vector c(sets.size(), Rational(0));
    c[k] = 1;
    const LpResult r = maximize(a, b, c);
    if (r.status != LpStatus::optimal || r.objective <= 0) return false;
  }
  return true;
}

struct Search {
  int n;
  std::vector<Coalition> candidates;
  std::vector<BalancedCollection>* out;

  void extend(std::size_t start, const CoalitionBasis& basis, std::vector<Coalition>& chosen) const {
    for (std::size_t idx = start; idx < candidates.size(); ++idx) visit(idx, basis, chosen);
  }

  void visit(std::size_t idx, const CoalitionBasis& basis, std::vector<Coalition>& chosen) const {
    CoalitionBasis next = basis;
    if (!next.try_add(candidates[idx])) return;
    chosen.push_back(candidates[idx]);
    if (auto lambda = next.express_grand()) {
      // the unique solution stays the same (zero-padded) under any independent
      // extension, so this branch ends either way
      if (std::all_of(lambda->begin(), lambda->end(), [](const Rational& w) { return w > 0; })) {
        out->push_back(BalancedCollection{chosen, *lambda});
      }
    } else if (static_cast<int>(chosen.size()) < n) {
      extend(idx + 1, next, chosen);
    }
    chosen.pop_back();
  }
};

void check_cap(int n, bool allow_large) {
  const int cap = allow_large ? kMbcLargeCap : kMbcDefaultCap;
  if (n < 2 || n > cap) {
    throw std::out_of_range("minimal balanced collection enumeration supports n in 2.." + std::to_string(cap) +
                            (allow_large ? "" : " (n = 6 needs the large-enumeration opt-in)") + ", got " +
                            std::to_string(n));
  }
}

void canonicalize(std::vector<BalancedCollection>& list) {
  for (auto& b : list) b = sorted_by_mask(std::move(b));
  std::sort(list.begin(), list.end(), canonical_less);
}

}  // namespace

WeightSolution solve_weights(int n, const std::vector<Coalition>& sets) {
  validate_sets(n, sets);
  WeightSolution out;
  if (sets.empty()) return out;
  CoalitionBasis basis(n);
  bool independent = true;
  for (Coalition s : sets) independent = basis.try_add(s) && independent;
  if (independent) {
    const auto lambda = basis.express_grand();
    if (lambda && std::all_of(lambda->begin(), lambda->end(), [](const Rational& w) { return w > 0; })) {
      out.verdict = WeightVerdict::minimal;
      out.collection = BalancedCollection{sets, *lambda};
    }
    return out;
  }
  if (has_positive_solution(n, sets)) out.verdict = WeightVerdict::balanced_not_minimal;
  return out;
}

BalancedCollection sorted_by_mask(BalancedCollection b) {
  std::vector<std::size_t> order(b.sets.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return b.sets[x] < b.sets[y]; });
  BalancedCollection out;
  for (std::size_t k : order) {
    out.sets.push_back(b.sets[k]);
    out.weights.push_back(b.weights[k]);
  }
  return out;
}

bool canonical_less(const BalancedCollection& a, const BalancedCollection& b) {
  if (a.sets.size() != b.sets.size()) return a.sets.size() < b.sets.size();
  return a.sets < b.sets;
}

std::vector<BalancedCollection> enumerate_mbc_serial(int n, bool allow_large) {
  check_cap(n, allow_large);
  std::vector<BalancedCollection> out;
  Search search{n, proper_coalitions(n), &out};
  std::vector<Coalition> chosen;
  search.extend(0, CoalitionBasis(n), chosen);
  canonicalize(out);
  return out;
}

std::vector<BalancedCollection> enumerate_mbc(int n, bool allow_large) {
  check_cap(n, allow_large);
  const std::vector<Coalition> candidates = proper_coalitions(n);
  const long long count = static_cast<long long>(candidates.size());
  std::vector<std::vector<BalancedCollection>> per_branch(candidates.size());
  // one task per leading coalition; branches are very uneven, hence dynamic
#pragma omp parallel for schedule(dynamic, 1) num_threads(par::max_threads())
  for (long long first = 0; first < count; ++first) {
    Search search{n, candidates, &per_branch[first]};
    std::vector<Coalition> chosen;
    search.visit(static_cast<std::size_t>(first), CoalitionBasis(n), chosen);
  }
  std::vector<BalancedCollection> out;
  for (auto& branch : per_branch) {
    for (auto& b : branch) out.push_back(std::move(b));
  }
  canonicalize(out);
  return out;
}

const std::vector<BalancedCollection>& mbc_list(int n, bool allow_large) {
  check_cap(n, allow_large);
  static std::array<std::once_flag, kMbcLargeCap + 1> once;
  static std::array<std::vector<BalancedCollection>, kMbcLargeCap + 1> cache;
  std::call_once(once[n], [n] { cache[n] = enumerate_mbc(n, true); });
  return cache[n];
}

BalancedCollection complement(int n, const BalancedCollection& b) {
  const Rational denom = b.weight_sum() - 1;
  if (denom == 0) throw std::invalid_argument("complement undefined: weights sum to 1");
  BalancedCollection out;
  for (std::size_t k = 0; k < b.sets.size(); ++k) {
    const Coalition c = b.sets[k].complement(n);
    if (c.empty()) throw std::invalid_argument("complement undefined: collection contains N");
    out.sets.push_back(c);
    out.weights.push_back(b.weights[k] / denom);
  }
  return out;
}

std::vector<BalancedCollection> special_partitions(int n) {
  check_player_count(n);
  if (n < 2) throw std::invalid_argument("special partitions need n >= 2");
  std::vector<BalancedCollection> out;
  BalancedCollection singletons;
  for (int i = 1; i <= n; ++i) {
    singletons.sets.push_back(Coalition::singleton(i));
    singletons.weights.push_back(1);
  }
  out.push_back(singletons);
  for (Coalition s : proper_coalitions(n)) {
    if (s.size() < 2) continue;
    BalancedCollection b;
    b.sets.push_back(s);
    b.weights.push_back(1);
    for (int p : s.complement(n).players()) {
      b.sets.push_back(Coalition::singleton(p));
      b.weights.push_back(1);
    }
    out.push_back(sorted_by_mask(std::move(b)));
  }
  return out;
}

}  // namespace bg
