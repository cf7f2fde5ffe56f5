#include "bg/linalg.hpp"

#include <stdexcept>

namespace bg {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> reduce(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::optional<Vector> solve_impl(Matrix a, Vector b, bool require_unique) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != cols) throw std::invalid_argument("solve: ragged matrix");
    a[r].push_back(b[r]);
  }
  const auto pivots = reduce(a, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
  if (require_unique && pivots.size() != cols) return std::nullopt;
  Vector x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

}  // namespace

std::size_t rank(Matrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  return reduce(rows, cols).size();
}

int affine_dimension(const std::vector<Vector>& points) {
  if (points.empty()) return -1;
  Matrix diffs;
  for (std::size_t k = 1; k < points.size(); ++k) {
    Vector d(points[k].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = points[k][c] - points[0][c];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rank(std::move(diffs)));
}

std::optional<Vector> solve_unique(Matrix a, Vector b) { return solve_impl(std::move(a), std::move(b), true); }

std::optional<Vector> solve_any(Matrix a, Vector b) { return solve_impl(std::move(a), std::move(b), false); }

Vector characteristic(int n, Coalition s) {
  Vector v(n, Rational(0));
  for (int p : s.players()) v.at(p - 1) = 1;
  return v;
}

std::size_t coalition_rank(int n, const std::vector<Coalition>& sets) {
  Matrix m;
  m.reserve(sets.size());
  for (Coalition s : sets) m.push_back(characteristic(n, s));
  return rank(std::move(m));
}

CoalitionBasis::CoalitionBasis(int n) : n_(n) {}

bool CoalitionBasis::try_add(Coalition s) {
  Vector v = characteristic(n_, s);
  Vector comb(rows_.size() + 1, Rational(0));
  comb.back() = 1;
  for (const Row& row : rows_) {
    if (v[row.pivot] == 0) continue;
    const Rational f = v[row.pivot];
    for (int c = 0; c < n_; ++c) v[c] -= f * row.values[c];
    for (std::size_t k = 0; k < row.combination.size(); ++k) comb[k] -= f * row.combination[k];
  }
  int pivot = -1;
  for (int c = 0; c < n_; ++c) {
    if (v[c] != 0) {
      pivot = c;
      break;
    }
  }
  if (pivot < 0) return false;
  const Rational inv = 1 / v[pivot];
  for (auto& x : v) x *= inv;
  for (auto& x : comb) x *= inv;
  // keep rows fully reduced against the new pivot
  for (Row& row : rows_) {
    row.combination.push_back(Rational(0));
    if (row.values[pivot] == 0) continue;
    const Rational f = row.values[pivot];
    for (int c = 0; c < n_; ++c) row.values[c] -= f * v[c];
    for (std::size_t k = 0; k < comb.size(); ++k) row.combination[k] -= f * comb[k];
  }
  rows_.push_back(Row{std::move(v), pivot, std::move(comb)});
  return true;
}

std::optional<Vector> CoalitionBasis::express_grand() const {
  Vector target(n_, Rational(1));
  Vector lambda(rows_.size(), Rational(0));
  for (const Row& row : rows_) {
    if (target[row.pivot] == 0) continue;
    const Rational f = target[row.pivot];
    for (int c = 0; c < n_; ++c) target[c] -= f * row.values[c];
    for (std::size_t k = 0; k < row.combination.size(); ++k) lambda[k] += f * row.combination[k];
  }
  for (const auto& x : target) {
    if (x != 0) return std::nullopt;
  }
  return lambda;
}

}  // namespace bg
