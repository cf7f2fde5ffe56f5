#include "bg/game.hpp"

#include <stdexcept>

namespace bg {

Game::Game(int n) : n_(n) {
  check_player_count(n);
  values_.assign(std::size_t{1} << n, Rational(0));
}

Game::Game(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
  check_player_count(n);
  if (values_.size() != (std::size_t{1} << n)) throw std::invalid_argument("game needs 2^n values");
  for (auto& x : values_) x.canonicalize();  // mpq_class(a, b) is not reduced on construction
  if (values_[0] != 0) throw std::invalid_argument("v(empty) must be 0");
}

Game Game::from_function(int n, const std::function<Rational(Coalition)>& fn) {
  check_player_count(n);
  std::vector<Rational> values(std::size_t{1} << n);
  for (std::size_t m = 1; m < values.size(); ++m) values[m] = fn(Coalition(static_cast<std::uint32_t>(m)));
  return Game(n, std::move(values));
}

Game Game::with(Coalition s, const Rational& value) const {
  if (s.empty() || !s.fits(n_)) throw std::invalid_argument("coalition outside the player set");
  Game out = *this;
  out.values_[s.mask()] = value;
  out.values_[s.mask()].canonicalize();
  return out;
}

Game Game::operator+(const Game& o) const {
  if (n_ != o.n_) throw std::invalid_argument("player count mismatch");
  Game out = *this;
  for (std::size_t m = 0; m < values_.size(); ++m) out.values_[m] += o.values_[m];
  return out;
}

Game Game::operator-(const Game& o) const {
  if (n_ != o.n_) throw std::invalid_argument("player count mismatch");
  Game out = *this;
  for (std::size_t m = 0; m < values_.size(); ++m) out.values_[m] -= o.values_[m];
  return out;
}

Game Game::operator-() const { return *this * Rational(-1); }

Game Game::operator*(const Rational& k) const {
  Rational factor = k;
  factor.canonicalize();
  Game out = *this;
  for (auto& value : out.values_) value *= factor;
  return out;
}

bool Game::is_zero_one() const {
  for (const auto& value : values_) {
    if (value != 0 && value != 1) return false;
  }
  return true;
}

Rational Allocation::operator()(Coalition s) const {
  Rational total = 0;
  for (std::uint32_t m = s.mask(); m != 0; m &= m - 1) total += x.at(std::countr_zero(m));
  return total;
}

Allocation unit_allocation(int n, int player) {
  Allocation a{std::vector<Rational>(n, Rational(0))};
  a.x.at(player - 1) = 1;
  return a;
}

bool in_core(const Game& v, const Allocation& x) {
  if (x.players() != v.players()) return false;
  const int n = v.players();
  // x(S) for every S via lowest-bit recurrence
  std::vector<Rational> sums(std::size_t{1} << n);
  for (std::size_t m = 1; m < sums.size(); ++m) {
    const std::size_t low = m & (~m + 1);
    sums[m] = sums[m ^ low] + x.x[std::countr_zero(low)];
    if (sums[m] < v.values()[m]) return false;
  }
  return sums.back() == v.grand_value();
}

namespace {

void check_coalition(int n, Coalition s) {
  check_player_count(n);
  if (s.empty()) throw std::invalid_argument("coalition must be nonempty");
  if (!s.fits(n)) throw std::invalid_argument("coalition " + s.to_key() + " not within 1.." + std::to_string(n));
}

}  // namespace

Game dirac(int n, Coalition s) {
  check_coalition(n, s);
  return Game(n).with(s, 1);
}

Game unanimity(int n, Coalition s) {
  check_coalition(n, s);
  return Game::from_function(n, [s](Coalition t) { return Rational(s.subset_of(t) ? 1 : 0); });
}

Game from_collection(int n, const std::vector<Coalition>& collection) {
  check_player_count(n);
  const Coalition grand = Coalition::grand(n);
  std::vector<Rational> values(std::size_t{1} << n, Rational(0));
  for (Coalition s : collection) {
    check_coalition(n, s);
    if (s == grand) throw std::invalid_argument("collection must not contain N");
    values[s.mask()] = 1;
  }
  values.back() = 1;
  return Game(n, std::move(values));
}

SimpleProper is_simple_proper(const Game& v) {
  const int n = v.players();
  const auto& val = v.values();
  SimpleProper out;
  out.simple = v.is_zero_one();
  if (out.simple) {
    // monotone iff v(S) <= v(S + i) for every single-player extension
    for (std::size_t m = 0; m < val.size() && out.simple; ++m) {
      for (int i = 0; i < n; ++i) {
        const std::size_t up = m | (std::size_t{1} << i);
        if (up != m && val[m] > val[up]) {
          out.simple = false;
          break;
        }
      }
    }
  }
  out.proper = true;
  const std::size_t grand = val.size() - 1;
  for (std::size_t m = 1; m < grand; ++m) {
    if (val[m] == 1 && val[grand ^ m] == 1) {
      out.proper = false;
      break;
    }
  }
  return out;
}

}  // namespace bg
