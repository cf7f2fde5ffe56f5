#include "bg/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace bg {

namespace {

class Tableau {
 public:
  // rows: [A | b]; objective row holds reduced costs z_j - c_j and -z0 in the last slot
  Tableau(Matrix rows, std::vector<std::size_t> basis) : t_(std::move(rows)), basis_(std::move(basis)) {}

  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return t_.empty() ? 0 : t_.front().size() - 1; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& rhs(std::size_t r) const { return t_[r].back(); }
  const Rational& at(std::size_t r, std::size_t c) const { return t_[r][c]; }

  void set_objective(const Vector& c, std::size_t active_cols) {
    active_ = active_cols;
    obj_.assign(cols() + 1, Rational(0));
    for (std::size_t j = 0; j < active_; ++j) obj_[j] = -c[j];
    for (std::size_t r = 0; r < rows(); ++r) {
      const Rational& cb = basis_[r] < c.size() ? c[basis_[r]] : zero_;
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols(); ++j) obj_[j] += cb * t_[r][j];
    }
  }

  Rational objective_value() const { return obj_.back(); }

  // Runs Bland's rule to optimality. Returns false if unbounded.
  bool optimize() {
    for (;;) {
      std::size_t enter = active_;
      for (std::size_t j = 0; j < active_; ++j) {
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == active_) return true;
      std::size_t leave = rows();
      Rational best;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (t_[r][enter] <= 0) continue;
        Rational ratio = t_[r].back() / t_[r][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / t_[r][c];
    for (auto& x : t_[r]) x *= inv;
    for (std::size_t k = 0; k < rows(); ++k) {
      if (k == r || t_[k][c] == 0) continue;
      const Rational f = t_[k][c];
      for (std::size_t j = 0; j <= cols(); ++j) t_[k][j] -= f * t_[r][j];
    }
    if (!obj_.empty() && obj_[c] != 0) {
      const Rational f = obj_[c];
      for (std::size_t j = 0; j <= cols(); ++j) obj_[j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  Matrix t_;
  std::vector<std::size_t> basis_;
  Vector obj_;
  std::size_t active_ = 0;
  Rational zero_ = 0;
};

}  // namespace

LpResult maximize(const Matrix& a, const Vector& b, const Vector& c) {
  const std::size_t m = a.size();
  const std::size_t k = c.size();
  if (b.size() != m) throw std::invalid_argument("maximize: rhs size mismatch");
  for (const auto& row : a) {
    if (row.size() != k) throw std::invalid_argument("maximize: matrix width mismatch");
  }

  // [A | I_artificial | b], rows flipped so b >= 0
  Matrix rows(m, Vector(k + m + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = b[r] < 0;
    for (std::size_t j = 0; j < k; ++j) rows[r][j] = flip ? Rational(-a[r][j]) : a[r][j];
    rows[r][k + r] = 1;
    rows[r].back() = flip ? Rational(-b[r]) : b[r];
    basis[r] = k + r;
  }
  Tableau tab(std::move(rows), std::move(basis));

  // phase one: maximize -sum(artificials)
  Vector phase1(k + m, Rational(0));
  for (std::size_t r = 0; r < m; ++r) phase1[k + r] = -1;
  tab.set_objective(phase1, k + m);
  tab.optimize();
  LpResult result;
  if (tab.objective_value() != 0) {
    result.status = LpStatus::infeasible;
    return result;
  }
  // drive remaining artificials out; rows that cannot pivot are redundant
  for (std::size_t r = 0; r < tab.rows();) {
    if (tab.basis()[r] < k) {
      ++r;
      continue;
    }
    std::size_t col = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (tab.at(r, j) != 0) {
        col = j;
        break;
      }
    }
    if (col == k) {
      tab.drop_row(r);
    } else {
      tab.pivot(r, col);
      ++r;
    }
  }

  Vector phase2(k + m, Rational(0));
  for (std::size_t j = 0; j < k; ++j) phase2[j] = c[j];
  tab.set_objective(phase2, k);
  if (!tab.optimize()) {
    result.status = LpStatus::unbounded;
    return result;
  }
  result.status = LpStatus::optimal;
  result.objective = tab.objective_value();
  result.x.assign(k, Rational(0));
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    if (tab.basis()[r] < k) result.x[tab.basis()[r]] = tab.rhs(r);
  }
  return result;
}

BalancingProgram solve_balancing_program(const Game& v) {
  const int n = v.players();
  const std::size_t full = (std::size_t{1} << n) - 1;
  const auto& val = v.values();

  // basis column r holds coalition basis[r]; binv is B^{-1}
  std::vector<std::uint32_t> basis(n);
  Matrix binv(n, Vector(n, Rational(0)));
  Vector xb(n, Rational(1));
  for (int i = 0; i < n; ++i) {
    basis[i] = 1u << i;
    binv[i][i] = 1;
  }

  BalancingProgram out;
  std::vector<Rational> pi_of(full + 1);
  for (;;) {
    // pi = c_B^T B^{-1}
    Vector pi(n, Rational(0));
    for (int r = 0; r < n; ++r) {
      const Rational& cb = val[basis[r]];
      if (cb == 0) continue;
      for (int i = 0; i < n; ++i) pi[i] += cb * binv[r][i];
    }
    // Bland: lowest mask with positive reduced cost v(S) - pi(S)
    std::size_t enter = 0;
    pi_of[0] = 0;
    for (std::size_t m = 1; m < full; ++m) {
      const std::size_t low = m & (~m + 1);
      pi_of[m] = pi_of[m ^ low] + pi[std::countr_zero(low)];
      if (val[m] > pi_of[m]) {
        enter = m;
        break;
      }
    }
    if (enter == 0) {
      out.duals = std::move(pi);
      break;
    }
    // u = B^{-1} 1^S
    Vector u(n, Rational(0));
    for (int r = 0; r < n; ++r) {
      for (std::size_t m = enter; m != 0; m &= m - 1) u[r] += binv[r][std::countr_zero(m)];
    }
    int leave = -1;
    Rational best;
    for (int r = 0; r < n; ++r) {
      if (u[r] <= 0) continue;
      Rational ratio = xb[r] / u[r];
      if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = std::move(ratio);
      }
    }
    if (leave < 0) throw std::logic_error("balancing program unbounded");  // y is bounded by 1
    const Rational inv = 1 / u[leave];
    for (auto& x : binv[leave]) x *= inv;
    xb[leave] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == leave || u[r] == 0) continue;
      const Rational f = u[r];
      for (int i = 0; i < n; ++i) binv[r][i] -= f * binv[leave][i];
      xb[r] -= f * xb[leave];
    }
    basis[leave] = static_cast<std::uint32_t>(enter);
    ++out.pivots;
  }

  out.value = 0;
  for (int r = 0; r < n; ++r) {
    out.value += val[basis[r]] * xb[r];
    if (xb[r] > 0) out.support.emplace_back(Coalition(basis[r]), xb[r]);
  }
  std::sort(out.support.begin(), out.support.end());
  return out;
}

}  // namespace bg
