#include "bg/coalition.hpp"

#include <sstream>
#include <stdexcept>

namespace bg {

void check_player_count(int n) {
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("player count must be in 1.." + std::to_string(kMaxPlayers) +
                                ", got " + std::to_string(n));
  }
}

Coalition Coalition::of(std::initializer_list<int> players) {
  return of(std::vector<int>(players));
}

Coalition Coalition::of(const std::vector<int>& players) {
  std::uint32_t mask = 0;
  for (int p : players) {
    if (p < 1 || p > kMaxPlayers) throw std::invalid_argument("player label out of range: " + std::to_string(p));
    mask |= 1u << (p - 1);
  }
  return Coalition(mask);
}

std::vector<int> Coalition::players() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Coalition::to_key() const {
  std::string out;
  for (int p : players()) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

std::string Coalition::to_compact() const {
  if (mask_ >> 9) return to_key();
  std::string out;
  for (int p : players()) out += static_cast<char>('0' + p);
  return out;
}

Coalition parse_coalition_key(const std::string& key, int n) {
  std::vector<int> players;
  std::stringstream in(key);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 2) {
      throw std::invalid_argument("malformed coalition key \"" + key + "\"");
    }
    const int p = std::stoi(item);
    if (p < 1 || p > n) throw std::invalid_argument("player " + item + " outside 1.." + std::to_string(n));
    if (!players.empty() && p <= players.back()) {
      throw std::invalid_argument("coalition key \"" + key + "\" must list players in ascending order");
    }
    players.push_back(p);
  }
  if (players.empty()) throw std::invalid_argument("empty coalition key");
  return Coalition::of(players);
}

std::vector<Coalition> proper_coalitions(int n) {
  check_player_count(n);
  std::vector<Coalition> out;
  const std::uint32_t grand = Coalition::grand(n).mask();
  out.reserve(grand - 1);
  for (std::uint32_t m = 1; m < grand; ++m) out.emplace_back(m);
  return out;
}

}  // namespace bg
