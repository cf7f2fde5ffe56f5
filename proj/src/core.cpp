#include "bg/core.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bg/balance.hpp"
#include "bg/lp.hpp"
#include "bg/parallel.hpp"

namespace bg {

CoreProgram::CoreProgram(const Game& v) : n_(v.players()), lower_(v.players()) {
  for (int i = 1; i <= n_; ++i) lower_[i - 1] = v(Coalition::singleton(i));
  const Coalition grand = Coalition::grand(n_);
  std::vector<Coalition> rows;
  for (Coalition s : proper_coalitions(n_)) {
    if (s.size() >= 2) rows.push_back(s);
  }
  const std::size_t cols = n_ + rows.size();
  auto lower_sum = [&](Coalition s) {
    Rational t = 0;
    for (int p : s.players()) t += lower_[p - 1];
    return t;
  };
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Vector row(cols, Rational(0));
    for (int p : rows[r].players()) row[p - 1] = 1;
    row[n_ + r] = -1;
    a_.push_back(std::move(row));
    b_.push_back(v(rows[r]) - lower_sum(rows[r]));
  }
  Vector eff(cols, Rational(0));
  for (int i = 0; i < n_; ++i) eff[i] = 1;
  a_.push_back(std::move(eff));
  b_.push_back(v(grand) - lower_sum(grand));

  const LpResult r = bg::maximize(a_, b_, Vector(cols, Rational(0)));
  feasible_ = r.status == LpStatus::optimal;
  if (feasible_) {
    Allocation x{lower_};
    for (int i = 0; i < n_; ++i) x.x[i] += r.x[i];
    point_ = std::move(x);
  }
}

std::optional<Rational> CoreProgram::maximize(const Vector& c) const {
  if (!feasible_) return std::nullopt;
  Vector obj(a_.front().size(), Rational(0));
  Rational offset = 0;
  for (int i = 0; i < n_; ++i) {
    obj[i] = c[i];
    offset += c[i] * lower_[i];
  }
  const LpResult r = bg::maximize(a_, b_, obj);
  if (r.status != LpStatus::optimal) throw std::logic_error("core LP not optimal on a bounded feasible core");
  return r.objective + offset;
}

std::optional<Rational> CoreProgram::minimize(const Vector& c) const {
  Vector neg(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
  auto m = maximize(neg);
  if (!m) return std::nullopt;
  return -*m;
}

namespace {

// Constraints x(S) >= v(S) that hold with equality at some core point.
std::vector<Coalition> touching_constraints(const Game& v, const CoreProgram& prog) {
  std::vector<Coalition> out;
  for (Coalition s : proper_coalitions(v.players())) {
    if (*prog.minimize(characteristic(v.players(), s)) == v(s)) out.push_back(s);
  }
  return out;
}

struct BasisSearch {
  const Game& v;
  const std::vector<Coalition>& candidates;
  std::set<Vector>* found;

  void extend(std::size_t start, const CoalitionBasis& basis, std::vector<Coalition>& chosen) const {
    for (std::size_t idx = start; idx < candidates.size(); ++idx) visit(idx, basis, chosen);
  }

  void visit(std::size_t idx, const CoalitionBasis& basis, std::vector<Coalition>& chosen) const {
    const int n = v.players();
    CoalitionBasis next = basis;
    if (!next.try_add(candidates[idx])) return;
    chosen.push_back(candidates[idx]);
    if (static_cast<int>(chosen.size()) == n) {
      leaf(chosen);
    } else {
      extend(idx + 1, next, chosen);
    }
    chosen.pop_back();
  }

  void leaf(const std::vector<Coalition>& chosen) const {
    const int n = v.players();
    Matrix a;
    Vector b;
    for (Coalition s : chosen) {
      a.push_back(characteristic(n, s));
      b.push_back(v(s));
    }
    auto x = solve_unique(std::move(a), std::move(b));
    if (x && in_core(v, Allocation{*x})) found->insert(std::move(*x));
  }
};

std::vector<Allocation> to_allocations(const std::set<Vector>& points) {
  std::vector<Allocation> out;
  for (const auto& p : points) out.push_back(Allocation{p});
  return out;
}

std::vector<Allocation> enumerate_core_vertices(const Game& v, bool parallel) {
  const CoreProgram prog(v);
  if (!prog.feasible()) return {};
  const int n = v.players();
  const std::vector<Coalition> candidates = touching_constraints(v, prog);
  CoalitionBasis root(n);
  root.try_add(Coalition::grand(n));
  std::vector<Coalition> chosen{Coalition::grand(n)};
  if (n == 1) {
    std::set<Vector> one;
    BasisSearch{v, candidates, &one}.leaf(chosen);
    return to_allocations(one);
  }
  if (!parallel) {
    std::set<Vector> found;
    BasisSearch{v, candidates, &found}.extend(0, root, chosen);
    return to_allocations(found);
  }
  const long long count = static_cast<long long>(candidates.size());
  std::vector<std::set<Vector>> per_branch(candidates.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(par::max_threads())
  for (long long first = 0; first < count; ++first) {
    std::vector<Coalition> local{Coalition::grand(n)};
    BasisSearch{v, candidates, &per_branch[first]}.visit(static_cast<std::size_t>(first), root, local);
  }
  std::set<Vector> found;
  for (auto& branch : per_branch) found.merge(branch);
  return to_allocations(found);
}

}  // namespace

std::vector<Allocation> core_vertices_serial(const Game& v) { return enumerate_core_vertices(v, false); }

CoreDescription core_vertices(const Game& v) {
  CoreDescription out;
  out.vertices = enumerate_core_vertices(v, true);
  std::vector<Vector> points;
  for (const auto& a : out.vertices) points.push_back(a.x);
  out.dimension = affine_dimension(points);
  if (!out.vertices.empty()) out.effective = effective_coalitions_lp(v);
  return out;
}

std::vector<Coalition> effective_coalitions_lp(const Game& v) {
  const CoreProgram prog(v);
  if (!prog.feasible()) throw std::invalid_argument("game is not balanced: empty core");
  std::vector<Coalition> out;
  for (Coalition s : proper_coalitions(v.players())) {
    if (*prog.maximize(characteristic(v.players(), s)) == v(s)) out.push_back(s);
  }
  out.push_back(Coalition::grand(v.players()));
  return out;
}

std::vector<Coalition> effective_coalitions(const Game& v, bool allow_large) {
  const int n = v.players();
  if (!is_balanced_lp(v).balanced) throw std::invalid_argument("game is not balanced: empty core");
  std::set<Coalition> out{Coalition::grand(n)};
  if (n >= 2) {
    for (const auto& b : mbc_list(n, allow_large)) {
      if (b.weighted_value(v) == v.grand_value()) out.insert(b.sets.begin(), b.sets.end());
    }
  }
  return {out.begin(), out.end()};
}

PointCore has_point_core(const Game& v) {
  const CoreProgram prog(v);
  if (!prog.feasible()) throw std::invalid_argument("game is not balanced: empty core");
  const int n = v.players();
  PointCore out;
  Allocation x{Vector(n)};
  for (int i = 1; i <= n; ++i) {
    const Vector e = characteristic(n, Coalition::singleton(i));
    const Rational lo = *prog.minimize(e);
    if (lo != *prog.maximize(e)) return out;
    x.x[i - 1] = lo;
  }
  out.point = true;
  out.x = std::move(x);
  return out;
}

bool face_point_core_rank(int n, const std::vector<BalancedCollection>& mbcs) {
  if (mbcs.empty()) throw std::invalid_argument("no collections given");
  std::set<Coalition> all;
  for (const auto& b : mbcs) {
    if (solve_weights(n, b.sets).verdict != WeightVerdict::minimal) {
      throw std::invalid_argument(b.label() + " is not a minimal balanced collection");
    }
    all.insert(b.sets.begin(), b.sets.end());
  }
  return static_cast<int>(coalition_rank(n, {all.begin(), all.end()})) == n;
}

}  // namespace bg
