#include "bg/cones.hpp"

#include <stdexcept>

#include "bg/balance.hpp"

namespace bg {

std::string Ray::name() const {
  switch (kind) {
    case RayKind::lineality_plus:
      return "w_" + tag.to_compact();
    case RayKind::lineality_minus:
      return "-w_" + tag.to_compact();
    case RayKind::r_set:
    case RayKind::r_player:
      return "r_" + tag.to_compact();
  }
  return {};
}

Vector coordinates(const Game& v, Ambient ambient) {
  const auto& values = v.values();
  const std::size_t end = ambient == Ambient::bg ? values.size() : values.size() - 1;
  return Vector(values.begin() + 1, values.begin() + static_cast<std::ptrdiff_t>(end));
}

int lineality_dimension(int n, Ambient ambient) { return ambient == Ambient::bg ? n : n - 1; }

namespace {

Game without_grand(const Game& v) { return v.with(Coalition::grand(v.players()), 0); }

void check_n(int n) {
  check_player_count(n);
  if (n < 2) throw std::invalid_argument("cones need n >= 2");
}

}  // namespace

std::vector<Ray> lineality_basis_bg(int n) {
  check_n(n);
  std::vector<Ray> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back({unanimity(n, Coalition::singleton(i)), RayKind::lineality_plus, Coalition::singleton(i)});
  }
  return out;
}

std::vector<Ray> lineality_basis_bga(int n) {
  check_n(n);
  std::vector<Ray> out;
  for (int i = 1; i < n; ++i) {
    Game w = Game::from_function(n, [&](Coalition s) -> Rational {
      if (s.size() == n) return 0;
      if (s.contains(i) && !s.contains(n)) return 1;
      if (!s.contains(i) && s.contains(n)) return -1;
      return 0;
    });
    out.push_back({std::move(w), RayKind::lineality_plus, Coalition::singleton(i)});
  }
  return out;
}

namespace {

std::vector<Ray> with_negatives(std::vector<Ray> basis) {
  const std::size_t k = basis.size();
  for (std::size_t i = 0; i < k; ++i) basis.push_back({-basis[i].direction, RayKind::lineality_minus, basis[i].tag});
  return basis;
}

void append_set_rays(int n, std::vector<Ray>& out) {
  for (Coalition s : proper_coalitions(n)) {
    if (s.size() > 1) out.push_back({-dirac(n, s), RayKind::r_set, s});
  }
}

}  // namespace

std::vector<Ray> extremal_rays_bg(int n) {
  std::vector<Ray> out = with_negatives(lineality_basis_bg(n));
  append_set_rays(n, out);
  for (int i = 1; i <= n; ++i) {
    Game r = Game::from_function(n, [&](Coalition s) -> Rational { return s.contains(i) && s.size() > 1 ? 1 : 0; });
    out.push_back({std::move(r), RayKind::r_player, Coalition::singleton(i)});
  }
  return out;
}

std::vector<Ray> extremal_rays_bga(int n) {
  std::vector<Ray> out = with_negatives(lineality_basis_bga(n));
  append_set_rays(n, out);
  for (int i = 1; i < n; ++i) {
    Game r = Game::from_function(n, [&](Coalition s) -> Rational {
      if (s.size() == n) return 0;
      if (s.contains(i) && !s.contains(n) && s.size() > 1) return 1;
      if (!s.contains(i) && s.contains(n)) return -1;
      return 0;
    });
    out.push_back({std::move(r), RayKind::r_player, Coalition::singleton(i)});
  }
  out.push_back({-dirac(n, Coalition::singleton(n)), RayKind::r_player, Coalition::singleton(n)});
  return out;
}

Rational row_value(const BalancedCollection& b, const Game& v, Ambient ambient) {
  Rational lhs = b.weighted_value(v);
  if (ambient == Ambient::bg) lhs -= v.grand_value();
  return lhs;
}

bool in_cone(const Game& v, Ambient ambient) {
  return is_balanced_lp(ambient == Ambient::bg ? v : without_grand(v)).balanced;
}

namespace {

Vector row_coefficients(int n, const BalancedCollection& b, Ambient ambient) {
  const std::size_t dim = (std::size_t{1} << n) - (ambient == Ambient::bg ? 1 : 2);
  Vector row(dim, Rational(0));
  for (std::size_t k = 0; k < b.sets.size(); ++k) row[b.sets[k].mask() - 1] = b.weights[k];
  if (ambient == Ambient::bg) row[dim - 1] = -1;
  return row;
}

bool proportional(const Vector& a, const Vector& b) {
  // a = t b for some t != 0
  Rational t = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (b[k] == 0) {
      if (a[k] != 0) return false;
      continue;
    }
    if (t == 0) t = a[k] / b[k];
    if (t == 0 || a[k] != t * b[k]) return false;
  }
  return t != 0;
}

}  // namespace

bool verify_extremal(int n, const Game& r, Ambient ambient) {
  check_n(n);
  if (r.players() != n) throw std::invalid_argument("ray has the wrong player count");
  Matrix tight;
  const auto& rows = mbc_list(n);
  for (const auto& b : rows) {
    const Rational value = row_value(b, r, ambient);
    if (value > 0) throw std::invalid_argument("direction violates the inequality of " + b.label());
    if (value == 0) tight.push_back(row_coefficients(n, b, ambient));
  }
  const Vector x = coordinates(r, ambient);
  if (tight.size() == rows.size()) {
    const auto basis = ambient == Ambient::bg ? lineality_basis_bg(n) : lineality_basis_bga(n);
    for (const auto& w : basis) {
      if (proportional(x, coordinates(w.direction, ambient))) return true;
    }
    return false;
  }
  const int solution_dim = static_cast<int>(x.size()) - static_cast<int>(rank(tight));
  return solution_dim == lineality_dimension(n, ambient) + 1;
}

std::vector<FacetTightness> facet_tightness(const Game& v, Ambient ambient) {
  std::vector<FacetTightness> out;
  for (const auto& b : mbc_list(v.players())) {
    const Rational value = row_value(b, v, ambient);
    if (value > 0) throw std::invalid_argument("game violates the inequality of " + b.label());
    out.push_back({b, value == 0});
  }
  return out;
}

IncidenceTable incidence_table(int n, Ambient ambient) {
  IncidenceTable out;
  out.facets = mbc_list(n);
  for (auto& r : ambient == Ambient::bg ? extremal_rays_bg(n) : extremal_rays_bga(n)) {
    if (r.kind == RayKind::r_set || r.kind == RayKind::r_player) out.rays.push_back(std::move(r));
  }
  for (const auto& b : out.facets) {
    std::vector<bool> row;
    for (const auto& r : out.rays) row.push_back(row_value(b, r.direction, ambient) == 0);
    out.incident.push_back(std::move(row));
  }
  return out;
}

ConicDecomposition decompose_bg(const Game& v) {
  const int n = v.players();
  check_n(n);
  ConicDecomposition d;
  Game rest = v;
  for (int i = 1; i <= n; ++i) {
    const Rational a = v(Coalition::singleton(i));
    d.lineality.push_back(a);
    rest = rest - unanimity(n, Coalition::singleton(i)) * a;
  }
  // rest vanishes on singletons; any core point x of it gives c_i = x_i and c_S = x(S) - rest(S)
  const BalancednessVerdict verdict = is_balanced_lp(rest);
  if (!verdict.balanced) throw std::invalid_argument("game is not in BG(n)");
  const Allocation& x = *verdict.witness;
  d.player_coefficients = x.x;
  for (Coalition s : proper_coalitions(n)) {
    if (s.size() > 1) d.set_coefficients.emplace_back(s, x(s) - rest(s));
  }
  return d;
}

Game recompose_bg(int n, const ConicDecomposition& d) {
  Game v(n);
  const auto lin = lineality_basis_bg(n);
  for (int i = 0; i < n; ++i) v = v + lin[i].direction * d.lineality[i];
  for (const auto& [s, c] : d.set_coefficients) v = v - dirac(n, s) * c;
  const auto rays = extremal_rays_bg(n);
  for (const auto& r : rays) {
    if (r.kind == RayKind::r_player) v = v + r.direction * d.player_coefficients[r.tag.first() - 1];
  }
  return v;
}

}  // namespace bg
