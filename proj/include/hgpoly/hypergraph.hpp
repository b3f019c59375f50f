#pragma once

#include <compare>
#include <vector>

#include "hgpoly/types.hpp"

namespace hgpoly {

/// A labeled hypergraph on {1..n}. Edges are vertex masks of size >= 2,
/// stored deduplicated in ascending mask order. n = 0 with no edges is the
/// Hopf unit.
struct Hypergraph {
  int n = 0;
  std::vector<Mask> edges;

  bool operator==(const Hypergraph&) const = default;
};

/// Validates, deduplicates and canonically orders the edge list.
/// Throws InputError naming the offending edge on a vertex out of 1..n or an
/// edge with fewer than 2 distinct vertices.
Hypergraph make_hypergraph(int n, const std::vector<std::vector<int>>& raw_edges);

/// Same validation, edges already given as masks.
Hypergraph from_edge_masks(int n, std::vector<Mask> edges);

/// Edges of g wholly inside `keep`, original labels preserved (the vertex set
/// stays {1..n}; relabeling is a separate step used only by the coproduct).
Hypergraph restrict_to(const Hypergraph& g, Mask keep);

/// Order-preserving relabeling of the vertices in `keep` onto {1..|keep|},
/// applied to the edges of g inside `keep`.
Hypergraph standardize(const Hypergraph& g, Mask keep);

/// Number of connected components, isolated vertices included.
int component_count(const Hypergraph& g);

}  // namespace hgpoly
