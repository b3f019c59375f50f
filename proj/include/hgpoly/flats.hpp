#pragma once

#include <vector>

#include "hgpoly/hypergraph.hpp"
#include "hgpoly/partition.hpp"

namespace hgpoly {

/// A flat G|_A: the set of edges falling inside the blocks of some partition,
/// together with the finest partition realizing it (connected components of
/// the selected edges plus singletons). Flat identity is the edge subset; the
/// partition is derived.
struct Flat {
  std::vector<int> edge_indices;  // sorted indices into the parent's edges
  SetPartition partition;

  bool operator==(const Flat& o) const { return edge_indices == o.edge_indices; }
  bool operator<(const Flat& o) const { return edge_indices < o.edge_indices; }
};

/// The flat induced by grouping edges inside the blocks of `grouping`
/// (closure is automatic: every edge inside a connected component of the
/// selected edges is itself selected).
Flat induced_flat(const Hypergraph& g, const std::vector<Mask>& grouping);

Flat flat_from_composition(const Hypergraph& g, const SetComposition& a);
Flat flat_from_edge_subset(const Hypergraph& g, const std::vector<int>& edge_indices);

/// True iff edge_indices is closed: every edge of g inside a single block of
/// the component partition of the selected edges is itself selected.
bool is_flat(const Hypergraph& g, const std::vector<int>& edge_indices);

/// All distinct flats of g, sorted by edge subset. Enumerates set partitions
/// of {1..n} and deduplicates the induced edge subsets.
std::vector<Flat> flats(const Hypergraph& g, int limit = kDefaultEnumerationLimit);

/// G/F: the hypergraph on the blocks of F.partition obtained by contracting
/// the flat edges. Edges are masks over block indices; coinciding block
/// images merge, with all original edge indices kept in `origin`.
struct ContractedHypergraph {
  SetPartition blocks;
  std::vector<Mask> edges;                // block-index masks, popcount >= 2
  std::vector<std::vector<int>> origin;   // per contracted edge, parent edge indices

  int block_count() const { return blocks.block_count(); }
};

/// Throws InputError if F fails the flat closure invariant.
ContractedHypergraph contract(const Hypergraph& g, const Flat& f);

/// Number of connected components of a contracted hypergraph; isolated
/// blocks count as components.
int component_count(const ContractedHypergraph& h);

}  // namespace hgpoly
