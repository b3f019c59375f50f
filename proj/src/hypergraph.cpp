#include "hgpoly/hypergraph.hpp"

#include <algorithm>
#include <sstream>

namespace hgpoly {

namespace {

std::string edge_to_string(const std::vector<int>& edge) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < edge.size(); ++i) os << (i ? "," : "") << edge[i];
  os << "}";
  return os.str();
}

}  // namespace

Hypergraph make_hypergraph(int n, const std::vector<std::vector<int>>& raw_edges) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count must be between 0 and " + std::to_string(kMaxVertices));
  }
  std::vector<Mask> masks;
  masks.reserve(raw_edges.size());
  for (const auto& edge : raw_edges) {
    Mask m = 0;
    for (int v : edge) {
      if (v < 1 || v > n) {
        throw InputError("edge " + edge_to_string(edge) + " contains vertex " +
                         std::to_string(v) + " outside 1.." + std::to_string(n));
      }
      m |= bit_of(v);
    }
    if (popcount(m) < 2) {
      throw InputError("edge " + edge_to_string(edge) +
                       " has fewer than 2 distinct vertices");
    }
    masks.push_back(m);
  }
  return from_edge_masks(n, std::move(masks));
}

Hypergraph from_edge_masks(int n, std::vector<Mask> edges) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count must be between 0 and " + std::to_string(kMaxVertices));
  }
  for (Mask e : edges) {
    if ((e & ~full_mask(n)) != 0 || popcount(e) < 2) {
      throw InputError("edge " + edge_to_string(to_vertices(e)) +
                       " is not a valid subset of 1.." + std::to_string(n) +
                       " of size >= 2");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Hypergraph{n, std::move(edges)};
}

Hypergraph restrict_to(const Hypergraph& g, Mask keep) {
  std::vector<Mask> kept;
  for (Mask e : g.edges) {
    if ((e & ~keep) == 0) kept.push_back(e);
  }
  return Hypergraph{g.n, std::move(kept)};
}

Hypergraph standardize(const Hypergraph& g, Mask keep) {
  // Order-preserving map of the vertices in `keep` onto an initial segment.
  std::array<int, kMaxVertices + 1> relabel{};
  int next = 0;
  for (int v = 1; v <= g.n; ++v) {
    if (contains(keep, v)) relabel[v] = ++next;
  }
  std::vector<Mask> edges;
  for (Mask e : g.edges) {
    if ((e & ~keep) != 0) continue;
    Mask m = 0;
    for (int v : to_vertices(e)) m |= bit_of(relabel[v]);
    edges.push_back(m);
  }
  std::sort(edges.begin(), edges.end());
  return Hypergraph{next, std::move(edges)};
}

int component_count(const Hypergraph& g) {
  SmallDsu dsu(g.n);
  for (Mask e : g.edges) {
    int first = min_vertex(e);
    for (int v : to_vertices(e)) dsu.unite(first - 1, v - 1);
  }
  int count = 0;
  for (int i = 0; i < g.n; ++i) {
    if (dsu.find(i) == i) ++count;
  }
  return count;
}

}  // namespace hgpoly
