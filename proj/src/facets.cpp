#include "bg/facets.hpp"

#include <algorithm>
#include <stdexcept>

#include "bg/linalg.hpp"

namespace bg {

bool BgPlusFacet::contains(const Game& v) const {
  if (nonnegativity) return v(set) == 0;
  return collection.weighted_value(v) == 1;
}

std::string BgPlusFacet::label() const {
  if (nonnegativity) return "v(" + set.to_compact() + ")=0";
  return collection.label();
}

std::vector<BgPlusFacet> facets_bgplus(int n, bool allow_large) {
  std::vector<BgPlusFacet> out;
  for (Coalition s : proper_coalitions(n)) out.push_back({true, s, {}});
  for (const auto& b : mbc_list(n, allow_large)) out.push_back({false, Coalition(), b});
  return out;
}

int facet_support_dimension(const BgPlusFacet& facet, const std::vector<VertexCollection>& vertices) {
  std::vector<Vector> points;
  for (const auto& d : vertices) {
    const Game g = d.game();
    if (facet.contains(g)) points.emplace_back(g.values().begin() + 1, g.values().end() - 1);
  }
  return affine_dimension(points);
}

VertexCollection property_b_combination(const VertexCollection& v1, const VertexCollection& v2,
                                        const VertexCollection& v3) {
  auto nested = [](const VertexCollection& a, const VertexCollection& b) {
    return a.players() == b.players() && std::includes(b.sets().begin(), b.sets().end(), a.sets().begin(), a.sets().end());
  };
  if (!nested(v1, v2) || !nested(v2, v3)) throw std::invalid_argument("vertices do not form a chain v1 <= v2 <= v3");
  return collection_of(v1.game() + v3.game() - v2.game());
}

bool property_b_closure(const VertexCollection& v1, const VertexCollection& v2, const VertexCollection& v3) {
  return property_b_combination(v1, v2, v3).is_vertex();
}

}  // namespace bg
