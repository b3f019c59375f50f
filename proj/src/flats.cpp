#include "hgpoly/flats.hpp"

#include <algorithm>
#include <map>

namespace hgpoly {

namespace {

/// Connected-component partition of {1..n} generated by the given edges.
SetPartition component_partition(int n, const Hypergraph& g,
                                 const std::vector<int>& edge_indices) {
  SmallDsu dsu(n);
  for (int idx : edge_indices) {
    Mask e = g.edges[idx];
    int first = min_vertex(e);
    for (int v : to_vertices(e)) dsu.unite(first - 1, v - 1);
  }
  std::array<Mask, kMaxVertices> acc{};
  for (int v = 1; v <= n; ++v) acc[dsu.find(v - 1)] |= bit_of(v);
  std::vector<Mask> blocks;
  for (int i = 0; i < n; ++i) {
    if (acc[i]) blocks.push_back(acc[i]);
  }
  return canonical_partition(std::move(blocks));
}

bool inside_some_block(Mask e, const std::vector<Mask>& blocks) {
  for (Mask b : blocks) {
    if ((e & ~b) == 0) return true;
  }
  return false;
}

}  // namespace

Flat induced_flat(const Hypergraph& g, const std::vector<Mask>& grouping) {
  std::vector<int> selected;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (inside_some_block(g.edges[i], grouping)) selected.push_back(i);
  }
  return Flat{selected, component_partition(g.n, g, selected)};
}

Flat flat_from_composition(const Hypergraph& g, const SetComposition& a) {
  return induced_flat(g, a.parts);
}

Flat flat_from_edge_subset(const Hypergraph& g, const std::vector<int>& edge_indices) {
  Flat f{edge_indices, component_partition(g.n, g, edge_indices)};
  std::sort(f.edge_indices.begin(), f.edge_indices.end());
  if (!is_flat(g, f.edge_indices)) {
    throw InputError("edge subset is not closed under its component partition");
  }
  return f;
}

bool is_flat(const Hypergraph& g, const std::vector<int>& edge_indices) {
  SetPartition p = component_partition(g.n, g, edge_indices);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (inside_some_block(g.edges[i], p.blocks) &&
        !std::binary_search(edge_indices.begin(), edge_indices.end(), i)) {
      return false;
    }
  }
  return true;
}

std::vector<Flat> flats(const Hypergraph& g, int limit) {
  check_enumeration_limit(g.n, limit);
  std::map<std::vector<int>, Flat> seen;
  for_each_set_partition(g.n, [&](const SetPartition& p) {
    Flat f = induced_flat(g, p.blocks);
    seen.emplace(f.edge_indices, f);
  });
  std::vector<Flat> out;
  out.reserve(seen.size());
  for (auto& [key, f] : seen) out.push_back(std::move(f));
  return out;
}

ContractedHypergraph contract(const Hypergraph& g, const Flat& f) {
  if (!is_flat(g, f.edge_indices)) {
    throw InputError("flat fails the closure invariant");
  }
  SetPartition expected = component_partition(g.n, g, f.edge_indices);
  if (!(f.partition == expected)) {
    throw InputError("flat partition is not the component partition of its edges");
  }

  ContractedHypergraph h;
  h.blocks = f.partition;
  std::map<Mask, std::vector<int>> image;  // block-index mask -> parent edges
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (std::binary_search(f.edge_indices.begin(), f.edge_indices.end(), i)) continue;
    Mask blockset = 0;
    for (int b = 0; b < h.blocks.block_count(); ++b) {
      if (g.edges[i] & h.blocks.blocks[b]) blockset |= Mask{1} << b;
    }
    if (popcount(blockset) < 2) {
      throw InternalError("non-flat edge contracted to a single block");
    }
    image[blockset].push_back(i);
  }
  for (auto& [blockset, origin] : image) {
    h.edges.push_back(blockset);
    h.origin.push_back(std::move(origin));
  }
  return h;
}

int component_count(const ContractedHypergraph& h) {
  int k = h.block_count();
  SmallDsu dsu(k);
  for (Mask e : h.edges) {
    int first = min_vertex(e) - 1;  // block indices are 0-based bits
    for (int b : to_vertices(e)) dsu.unite(first, b - 1);
  }
  int count = 0;
  for (int i = 0; i < k; ++i) {
    if (dsu.find(i) == i) ++count;
  }
  return count;
}

}  // namespace hgpoly
