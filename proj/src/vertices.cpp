#include "bg/vertices.hpp"

#include <algorithm>
#include <stdexcept>

namespace bg {

VertexCollection::VertexCollection(int n, std::vector<Coalition> sets) : n_(n), sets_(std::move(sets)) {
  check_player_count(n);
  std::sort(sets_.begin(), sets_.end());
  const Coalition grand = Coalition::grand(n);
  for (std::size_t k = 0; k < sets_.size(); ++k) {
    const Coalition s = sets_[k];
    if (s.empty()) throw std::invalid_argument("collection contains the empty set");
    if (!s.fits(n)) throw std::invalid_argument("coalition " + s.to_key() + " outside the player set");
    if (s == grand) throw std::invalid_argument("collection contains N");
    if (k > 0 && sets_[k - 1] == s) throw std::invalid_argument("duplicate coalition " + s.to_key());
  }
}

bool VertexCollection::contains(Coalition s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

Coalition VertexCollection::intersection() const {
  Coalition out = Coalition::grand(n_);
  for (Coalition s : sets_) out = out & s;
  return out;
}

std::string VertexCollection::label() const {
  std::string out = "{";
  for (std::size_t k = 0; k < sets_.size(); ++k) {
    if (k) out += ',';
    out += sets_[k].to_compact();
  }
  return out + "}";
}

namespace {

// Proper coalitions containing s.
std::vector<Coalition> upset(int n, Coalition s) {
  std::vector<Coalition> out;
  for (Coalition t : proper_coalitions(n)) {
    if (s.subset_of(t)) out.push_back(t);
  }
  return out;
}

}  // namespace

std::string VertexCollection::name() const {
  if (sets_.empty()) return "u_" + Coalition::grand(n_).to_compact();
  std::vector<Coalition> minimal;
  for (Coalition s : sets_) {
    const bool has_smaller = std::any_of(sets_.begin(), sets_.end(), [&](Coalition t) { return t != s && t.subset_of(s); });
    if (!has_smaller) minimal.push_back(s);
  }
  if (minimal.size() <= 2) {
    std::vector<Coalition> generated;
    for (Coalition m : minimal) {
      for (Coalition t : upset(n_, m)) generated.push_back(t);
    }
    std::sort(generated.begin(), generated.end());
    generated.erase(std::unique(generated.begin(), generated.end()), generated.end());
    if (generated == sets_) {
      std::string out = "u_" + minimal[0].to_compact();
      if (minimal.size() == 2) out += "∨u_" + minimal[1].to_compact();
      return out;
    }
  }
  std::string out = "d_";
  for (std::size_t k = 0; k < sets_.size(); ++k) {
    if (k) out += ',';
    out += sets_[k].to_compact();
  }
  return out;
}

bool canonical_less(const VertexCollection& a, const VertexCollection& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.sets() < b.sets();
}

bool is_vertex(int n, const std::vector<Coalition>& sets) { return VertexCollection(n, sets).is_vertex(); }

VertexCollection collection_of(const Game& v) {
  const int n = v.players();
  if (v.grand_value() != 1) throw std::invalid_argument("game does not have v(N) = 1");
  std::vector<Coalition> sets;
  for (Coalition s : proper_coalitions(n)) {
    if (v(s) == 1) {
      sets.push_back(s);
    } else if (v(s) != 0) {
      throw std::invalid_argument("game is not 0-1 valued");
    }
  }
  return VertexCollection(n, std::move(sets));
}

std::vector<VertexCollection> enumerate_vertices(int n, bool allow_large) {
  check_player_count(n);
  const int cap = allow_large ? kVertexLargeCap : kVertexDefaultCap;
  if (n > cap) {
    throw std::out_of_range("vertex enumeration supports n <= " + std::to_string(cap) +
                            (allow_large ? "" : " (n = 5 needs the large-enumeration opt-in)"));
  }
  std::vector<VertexCollection> out{VertexCollection(n, {})};
  // group nonempty families by their exact intersection I
  const Coalition grand = Coalition::grand(n);
  for_each_nonempty_subset(grand, [&](Coalition inter) {
    const std::vector<Coalition> pool = upset(n, inter);
    const std::uint64_t families = std::uint64_t{1} << pool.size();
    for (std::uint64_t pick = 1; pick < families; ++pick) {
      Coalition meet = grand;
      std::vector<Coalition> sets;
      for (std::uint64_t bits = pick; bits != 0; bits &= bits - 1) {
        const Coalition s = pool[std::countr_zero(bits)];
        meet = meet & s;
        sets.push_back(s);
      }
      if (meet == inter) out.emplace_back(n, std::move(sets));
    }
  });
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace bg
