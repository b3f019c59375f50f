#include "hgpoly/orientation.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace hgpoly {

namespace detail {

std::vector<Mask> proper_head_choices(Mask edge) {
  std::vector<Mask> out;
  Mask head = 0;
  do {
    head = (head - edge) & edge;
    if (head == 0) break;
    if (head != edge) out.push_back(head);
  } while (true);
  return out;
}

int acyclic_block_count(int n, const std::vector<Mask>& edges, const Mask* heads) {
  // Flat DSU over ground elements, merging each head.
  std::array<int, kMaxVertices> parent;
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    Mask h = heads[e];
    int first = min_vertex(h) - 1;
    for (Mask m = h & (h - 1); m; m &= m - 1) {
      parent[find(min_vertex(m) - 1)] = find(first);
    }
  }
  std::array<int, kMaxVertices> block;
  int blocks = 0;
  for (int v = 0; v < n; ++v) {
    if (find(v) == v) block[v] = blocks++;
  }
  for (int v = 0; v < n; ++v) block[v] = block[find(v)];

  std::array<Mask, kMaxVertices> adj{};
  for (std::size_t e = 0; e < edges.size(); ++e) {
    int hb = block[min_vertex(heads[e]) - 1];
    for (Mask m = edges[e] & ~heads[e]; m; m &= m - 1) {
      int tb = block[min_vertex(m) - 1];
      if (tb == hb) return -1;  // head and tail share a block
      adj[hb] |= Mask{1} << tb;
    }
  }

  std::array<int, kMaxVertices> indeg{};
  for (int i = 0; i < blocks; ++i) {
    for (Mask m = adj[i]; m; m &= m - 1) ++indeg[min_vertex(m) - 1];
  }
  std::array<int, kMaxVertices> stack;
  int top = 0;
  for (int i = 0; i < blocks; ++i) {
    if (indeg[i] == 0) stack[top++] = i;
  }
  int removed = 0;
  while (top > 0) {
    int u = stack[--top];
    ++removed;
    for (Mask m = adj[u]; m; m &= m - 1) {
      int v = min_vertex(m) - 1;
      if (--indeg[v] == 0) stack[top++] = v;
    }
  }
  return removed == blocks ? blocks : -1;
}

}  // namespace detail

long long count_acyclic_orientations(const ContractedHypergraph& h) {
  long long count = 0;
  int n = h.block_count();
  for_each_orientation(h.edges, [&](const Orientation& o) {
    if (detail::acyclic_block_count(n, h.edges, o.heads.data()) >= 0) ++count;
  });
  return count;
}

std::vector<Orientation> orientations(const Hypergraph& g) {
  std::vector<Orientation> out;
  for_each_orientation(g.edges, [&](const Orientation& o) { out.push_back(o); });
  return out;
}

std::vector<Orientation> orientations(const ContractedHypergraph& h) {
  std::vector<Orientation> out;
  for_each_orientation(h.edges, [&](const Orientation& o) { out.push_back(o); });
  return out;
}

namespace {

// Shared quotient construction over n ground elements (vertices or blocks).
std::pair<SetPartition, Digraph> quotient_impl(int n, const std::vector<Mask>& edges,
                                               const std::vector<Mask>& heads) {
  if (edges.size() != heads.size()) {
    throw InternalError("orientation head count does not match edge count");
  }
  SmallDsu dsu(n);
  for (Mask h : heads) {
    int first = min_vertex(h);
    for (int v : to_vertices(h)) dsu.unite(first - 1, v - 1);
  }
  std::array<Mask, kMaxVertices> acc{};
  for (int v = 1; v <= n; ++v) acc[dsu.find(v - 1)] |= bit_of(v);
  std::vector<Mask> blocks;
  for (int i = 0; i < n; ++i) {
    if (acc[i]) blocks.push_back(acc[i]);
  }
  SetPartition part = canonical_partition(std::move(blocks));

  std::array<int, kMaxVertices + 1> block_index{};
  for (int b = 0; b < part.block_count(); ++b) {
    for (int v : to_vertices(part.blocks[b])) block_index[v] = b;
  }

  Digraph d;
  d.vertices = part.blocks;
  std::set<std::pair<int, int>> arcs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int hb = block_index[min_vertex(heads[i])];
    for (int v : to_vertices(edges[i] & ~heads[i])) {
      int tb = block_index[v];
      if (tb == hb) {
        ++d.cycle_witnesses;
      } else {
        arcs.emplace(hb, tb);
      }
    }
  }
  d.arcs.assign(arcs.begin(), arcs.end());
  return {std::move(part), std::move(d)};
}

bool dag_check(int node_count, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<int> indeg(node_count, 0);
  for (auto [u, v] : arcs) ++indeg[v];
  std::vector<int> stack;
  for (int i = 0; i < node_count; ++i) {
    if (indeg[i] == 0) stack.push_back(i);
  }
  int removed = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++removed;
    for (auto [a, b] : arcs) {
      if (a == u && --indeg[b] == 0) stack.push_back(b);
    }
  }
  return removed == node_count;
}

// Builds a face key from a flat plus one raw head per non-flat edge. Heads are
// saturated to the flat blocks they meet; the block partition merges flat
// blocks joined by a head.
FaceKey make_face_key(const Hypergraph& g, Flat flat,
                      std::vector<std::pair<int, Mask>> raw_heads) {
  std::sort(raw_heads.begin(), raw_heads.end());
  const SetPartition& fp = flat.partition;

  FaceKey key;
  SmallDsu dsu(fp.block_count());
  for (auto& [idx, h] : raw_heads) {
    if (h == 0 || (h & ~g.edges[idx]) != 0) {
      throw InternalError("orientation head is not a nonempty subset of its edge");
    }
    Mask saturated = 0;
    int first = -1;
    for (int b = 0; b < fp.block_count(); ++b) {
      if (fp.blocks[b] & h) {
        saturated |= fp.blocks[b];
        if (first < 0) {
          first = b;
        } else {
          dsu.unite(first, b);
        }
      }
    }
    Mask head = g.edges[idx] & saturated;
    if (head == g.edges[idx]) {
      throw InternalError("saturated head swallows its edge; the edge belongs to the flat");
    }
    key.heads.emplace_back(idx, head);
  }

  std::array<Mask, kMaxVertices> acc{};
  for (int b = 0; b < fp.block_count(); ++b) acc[dsu.find(b)] |= fp.blocks[b];
  std::vector<Mask> merged;
  for (int b = 0; b < fp.block_count(); ++b) {
    if (acc[b]) merged.push_back(acc[b]);
  }
  key.blocks = canonical_partition(std::move(merged));
  key.dim = g.n - key.blocks.block_count();
  key.flat = std::move(flat);
  return key;
}

}  // namespace

std::pair<SetPartition, Digraph> orientation_quotient(const Hypergraph& g,
                                                      const Orientation& o) {
  return quotient_impl(g.n, g.edges, o.heads);
}

std::pair<SetPartition, Digraph> orientation_quotient(const ContractedHypergraph& h,
                                                      const Orientation& o) {
  // Work over block indices, then name each merged group by its vertex set.
  auto [part, d] = quotient_impl(h.block_count(), h.edges, o.heads);
  auto expand = [&](Mask index_mask) {
    Mask out = 0;
    for (int b : to_vertices(index_mask)) out |= h.blocks.blocks[b - 1];
    return out;
  };
  for (Mask& b : part.blocks) b = expand(b);
  for (Mask& v : d.vertices) v = expand(v);
  return {std::move(part), std::move(d)};
}

bool is_acyclic(const Digraph& d) {
  return d.cycle_witnesses == 0 &&
         dag_check(static_cast<int>(d.vertices.size()), d.arcs);
}

bool is_acyclic(const Hypergraph& g, const Orientation& o) {
  return is_acyclic(orientation_quotient(g, o).second);
}

bool is_acyclic(const ContractedHypergraph& h, const Orientation& o) {
  return is_acyclic(orientation_quotient(h, o).second);
}

FaceKey omega(const Hypergraph& g, const SetComposition& a) {
  Flat flat = flat_from_composition(g, a);
  std::vector<std::pair<int, Mask>> heads;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (std::binary_search(flat.edge_indices.begin(), flat.edge_indices.end(), i))
      continue;
    Mask head = 0;
    for (Mask part : a.parts) {
      head = g.edges[i] & part;
      if (head) break;
    }
    heads.emplace_back(i, head);
  }
  return make_face_key(g, std::move(flat), std::move(heads));
}

Digraph face_quotient(const Hypergraph& g, const FaceKey& key) {
  Digraph d;
  d.vertices = key.blocks.blocks;
  std::set<std::pair<int, int>> arcs;
  for (const auto& [idx, h] : key.heads) {
    int hb = block_of(key.blocks, min_vertex(h));
    if ((h & ~key.blocks.blocks[hb]) != 0) {
      throw InternalError("face head straddles two blocks");
    }
    for (int v : to_vertices(g.edges[idx] & ~h)) {
      int tb = block_of(key.blocks, v);
      if (tb == hb) {
        ++d.cycle_witnesses;
      } else {
        arcs.emplace(hb, tb);
      }
    }
  }
  d.arcs.assign(arcs.begin(), arcs.end());
  return d;
}

SetComposition psi(const Hypergraph& g, const FaceKey& key) {
  Digraph d = face_quotient(g, key);
  if (d.cycle_witnesses > 0) {
    throw InputError("face key has a cyclic quotient");
  }
  int k = static_cast<int>(d.vertices.size());
  std::vector<int> indeg(k, 0);
  for (auto [u, v] : d.arcs) ++indeg[v];
  std::vector<bool> removed(k, false);

  SetComposition out;
  for (int step = 0; step < k; ++step) {
    // Source block whose minimum element is largest.
    int pick = -1;
    for (int i = 0; i < k; ++i) {
      if (removed[i] || indeg[i] != 0) continue;
      if (pick < 0 || min_vertex(d.vertices[i]) > min_vertex(d.vertices[pick]))
        pick = i;
    }
    if (pick < 0) {
      throw InputError("face key has a cyclic quotient");
    }
    removed[pick] = true;
    out.parts.push_back(d.vertices[pick]);
    for (auto [u, v] : d.arcs) {
      if (u == pick) --indeg[v];
    }
  }
  return out;
}

FaceKey normalize_cone(const Hypergraph& g, const std::vector<Mask>& family) {
  if (family.size() != g.edges.size()) {
    throw InputError("family must assign one subset to each edge");
  }
  std::vector<Mask> k(family);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0 || (k[i] & ~g.edges[i]) != 0) {
      throw InputError("family member is not a nonempty subset of its edge");
    }
  }

  const int m = static_cast<int>(g.edges.size());
  while (true) {
    // Saturation fixpoint: each subset absorbs every flat block it meets;
    // subsets that swallow their edge promote that edge into the flat.
    std::vector<int> flat_edges;
    Flat flat;
    while (true) {
      flat_edges.clear();
      for (int i = 0; i < m; ++i) {
        if (k[i] == g.edges[i]) flat_edges.push_back(i);
      }
      flat = Flat{flat_edges, {}};
      {
        SmallDsu dsu(g.n);
        for (int i : flat_edges) {
          int first = min_vertex(g.edges[i]);
          for (int v : to_vertices(g.edges[i])) dsu.unite(first - 1, v - 1);
        }
        std::array<Mask, kMaxVertices> acc{};
        for (int v = 1; v <= g.n; ++v) acc[dsu.find(v - 1)] |= bit_of(v);
        std::vector<Mask> blocks;
        for (int i = 0; i < g.n; ++i) {
          if (acc[i]) blocks.push_back(acc[i]);
        }
        flat.partition = canonical_partition(std::move(blocks));
      }
      bool changed = false;
      for (int i = 0; i < m; ++i) {
        if (k[i] == g.edges[i]) continue;
        Mask covered = 0;
        for (Mask b : flat.partition.blocks) {
          if (b & k[i]) covered |= b;
        }
        Mask sat = g.edges[i] & covered;
        if (sat != k[i]) {
          k[i] = sat;
          changed = true;
        }
      }
      if (!changed) break;
    }

    // Read off the induced orientation of the contraction and look for
    // directed cycles among the merged blocks. Flat blocks are pre-merged:
    // the cone already forces equality inside them.
    std::vector<std::pair<int, Mask>> heads;
    std::vector<Mask> head_masks, edge_masks;
    for (int i = 0; i < m; ++i) {
      if (k[i] == g.edges[i]) continue;
      heads.emplace_back(i, k[i]);
      head_masks.push_back(k[i]);
      edge_masks.push_back(g.edges[i]);
    }
    SmallDsu dsu(g.n);
    for (Mask b : flat.partition.blocks) {
      int first = min_vertex(b);
      for (int v : to_vertices(b)) dsu.unite(first - 1, v - 1);
    }
    for (Mask h : head_masks) {
      int first = min_vertex(h);
      for (int v : to_vertices(h)) dsu.unite(first - 1, v - 1);
    }
    SetPartition part;
    {
      std::array<Mask, kMaxVertices> acc{};
      for (int v = 1; v <= g.n; ++v) acc[dsu.find(v - 1)] |= bit_of(v);
      std::vector<Mask> blocks;
      for (int i = 0; i < g.n; ++i) {
        if (acc[i]) blocks.push_back(acc[i]);
      }
      part = canonical_partition(std::move(blocks));
    }
    int bc = part.block_count();
    std::vector<Mask> reach(bc, 0);
    for (int i = 0; i < bc; ++i) reach[i] = Mask{1} << i;
    for (std::size_t e = 0; e < edge_masks.size(); ++e) {
      int hb = block_of(part, min_vertex(head_masks[e]));
      for (int v : to_vertices(edge_masks[e] & ~head_masks[e])) {
        int tb = block_of(part, v);
        if (tb != hb) reach[hb] |= Mask{1} << tb;
      }
    }
    for (bool grown = true; grown;) {
      grown = false;
      for (int i = 0; i < bc; ++i) {
        Mask next = reach[i];
        for (int j : to_vertices(reach[i])) next |= reach[j - 1];
        if (next != reach[i]) {
          reach[i] = next;
          grown = true;
        }
      }
    }

    std::vector<bool> witnessed(bc, false);
    for (std::size_t e = 0; e < edge_masks.size(); ++e) {
      int hb = block_of(part, min_vertex(head_masks[e]));
      if ((edge_masks[e] & ~head_masks[e]) & part.blocks[hb]) witnessed[hb] = true;
    }

    // Group blocks into strongly connected components; a component is a cycle
    // if it has two blocks or a head-to-tail arc inside one block.
    std::vector<int> comp(bc, -1);
    bool found_cycle = false;
    for (int i = 0; i < bc; ++i) {
      if (comp[i] >= 0) continue;
      Mask members = 0;
      for (int j = 0; j < bc; ++j) {
        if ((reach[i] >> j & 1u) && (reach[j] >> i & 1u)) members |= Mask{1} << j;
      }
      Mask w = 0;
      bool cyclic = popcount(members) >= 2;
      for (int j : to_vertices(members)) {
        comp[j - 1] = i;
        w |= part.blocks[j - 1];
        if (witnessed[j - 1]) cyclic = true;
      }
      if (!cyclic) continue;
      found_cycle = true;
      for (int e = 0; e < m; ++e) {
        if (k[e] != g.edges[e] && (k[e] & w)) k[e] |= g.edges[e] & w;
      }
    }
    if (!found_cycle) {
      return make_face_key(g, std::move(flat), std::move(heads));
    }
  }
}

bool is_subface(const Hypergraph& g, const FaceKey& a, const FaceKey& b) {
  // Every block of a must sit inside one block of b.
  std::vector<int> image(a.blocks.block_count(), -1);
  for (int i = 0; i < a.blocks.block_count(); ++i) {
    int bi = block_of(b.blocks, min_vertex(a.blocks.blocks[i]));
    if ((a.blocks.blocks[i] & ~b.blocks.blocks[bi]) != 0) return false;
    image[i] = bi;
  }

  Digraph db = face_quotient(g, b);
  int bc = static_cast<int>(db.vertices.size());
  std::vector<Mask> reach(bc, 0);
  for (int i = 0; i < bc; ++i) reach[i] = Mask{1} << i;
  for (auto [u, v] : db.arcs) reach[u] |= Mask{1} << v;
  for (bool grown = true; grown;) {
    grown = false;
    for (int i = 0; i < bc; ++i) {
      Mask next = reach[i];
      for (int j : to_vertices(reach[i])) next |= reach[j - 1];
      if (next != reach[i]) {
        reach[i] = next;
        grown = true;
      }
    }
  }

  Digraph da = face_quotient(g, a);
  for (auto [u, v] : da.arcs) {
    int iu = image[u], iv = image[v];
    if (iu != iv && !(reach[iu] >> iv & 1u)) return false;
  }
  return true;
}

}  // namespace hgpoly
