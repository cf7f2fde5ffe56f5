#ifndef BG_FACETS_HPP
#define BG_FACETS_HPP

#include <string>
#include <vector>

#include "bg/mbc.hpp"
#include "bg/vertices.hpp"

namespace bg {

/// One defining inequality of BG_+(n) turned into an equality: either
/// v(S) = 0 for a proper coalition S, or sum lambda_S v(S) = 1 for a minimal
/// balanced collection.
struct BgPlusFacet {
  bool nonnegativity = false;
  Coalition set;                   ///< S, for nonnegativity facets
  BalancedCollection collection;   ///< for collection facets

  bool contains(const Game& v) const;
  /// "v(12)=0" or "{12,13,23}"
  std::string label() const;
};

/// The 2^n - 2 nonnegativity facets followed by one facet per minimal
/// balanced collection (excluding {N}). Throws std::out_of_range beyond the
/// enumeration cap.
std::vector<BgPlusFacet> facets_bgplus(int n, bool allow_large = false);

/// Affine dimension of the vertices lying on `facet`. A facet of BG_+(n) has
/// 2^n - 3.
int facet_support_dimension(const BgPlusFacet& facet, const std::vector<VertexCollection>& vertices);

/// Vertices d_1 <= d_2 <= d_3 (as games, i.e. nested families). Returns the
/// family of d_1 + d_3 - d_2, which is D1 together with D3 \ D2.
/// Throws std::invalid_argument when the families are not nested.
VertexCollection property_b_combination(const VertexCollection& v1, const VertexCollection& v2,
                                        const VertexCollection& v3);

/// True iff v1 + v3 - v2 is again a vertex.
bool property_b_closure(const VertexCollection& v1, const VertexCollection& v2, const VertexCollection& v3);

}  // namespace bg

#endif  // BG_FACETS_HPP
