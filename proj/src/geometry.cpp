#include "hgpoly/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hgpoly {

int polytope_dim(const Hypergraph& g) { return g.n - component_count(g); }

std::vector<FaceKey> enumerate_faces(const Hypergraph& g, int limit) {
  check_enumeration_limit(g.n, limit);
  std::set<FaceKey> seen;
  for_each_set_composition(g.n, [&](const SetComposition& a) { seen.insert(omega(g, a)); });
  std::vector<FaceKey> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const FaceKey& a, const FaceKey& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a < b;
  });
  return out;
}

FVector f_vector(const Hypergraph& g, int limit) {
  FVector f;
  f.counts.assign(polytope_dim(g) + 1, 0);
  for (const FaceKey& key : enumerate_faces(g, limit)) {
    if (key.dim < 0 || key.dim >= static_cast<int>(f.counts.size())) {
      throw InternalError("face dimension outside 0..dim P");
    }
    ++f.counts[key.dim];
  }
  return f;
}

namespace {

std::vector<Mask> reachability(int nodes, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<Mask> reach(nodes, 0);
  for (int i = 0; i < nodes; ++i) reach[i] = Mask{1} << i;
  for (auto [u, v] : arcs) reach[u] |= Mask{1} << v;
  for (bool grown = true; grown;) {
    grown = false;
    for (int i = 0; i < nodes; ++i) {
      Mask next = reach[i];
      for (int j : to_vertices(reach[i])) next |= reach[j - 1];
      if (next != reach[i]) {
        reach[i] = next;
        grown = true;
      }
    }
  }
  return reach;
}

}  // namespace

Digraph hasse_diagram(const Digraph& d) {
  int nodes = static_cast<int>(d.vertices.size());
  std::vector<Mask> reach = reachability(nodes, d.arcs);
  Digraph h;
  h.vertices = d.vertices;
  h.cycle_witnesses = d.cycle_witnesses;
  for (auto [u, v] : d.arcs) {
    bool redundant = false;
    for (auto [a, w] : d.arcs) {
      if (a == u && w != v && (reach[w] >> v & 1u)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) h.arcs.push_back({u, v});
  }
  std::sort(h.arcs.begin(), h.arcs.end());
  return h;
}

bool is_simple(const Hypergraph& g, int limit) {
  for (const FaceKey& key : enumerate_faces(g, limit)) {
    if (key.dim != 0) continue;
    Digraph h = hasse_diagram(face_quotient(g, key));
    // Forest test on the underlying undirected graph.
    SmallDsu dsu(static_cast<int>(h.vertices.size()));
    for (auto [u, v] : h.arcs) {
      if (dsu.find(u) == dsu.find(v)) return false;
      dsu.unite(u, v);
    }
  }
  return true;
}

std::vector<FaceKey> covering_faces(const Hypergraph& g, const FaceKey& key) {
  std::vector<Mask> family(g.edges.size(), 0);
  for (int i : key.flat.edge_indices) family[i] = g.edges[i];
  for (const auto& [idx, h] : key.heads) family[idx] = h;

  Digraph hasse = hasse_diagram(face_quotient(g, key));
  std::vector<FaceKey> out;
  for (auto [u, v] : hasse.arcs) {
    Mask w = key.blocks.blocks[u] | key.blocks.blocks[v];
    std::vector<Mask> fam = family;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (fam[i] & w) fam[i] |= g.edges[i] & w;
    }
    out.push_back(normalize_cone(g, fam));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Skeleton one_skeleton(const Hypergraph& g, int limit) {
  Skeleton s;
  std::vector<std::vector<std::pair<int, int>>> vertex_arcs;  // per 0-face, arcs as vertex pairs
  for (const FaceKey& key : enumerate_faces(g, limit)) {
    if (key.dim == 0) {
      Digraph d = face_quotient(g, key);
      std::vector<std::pair<int, int>> arcs;
      for (auto [u, v] : d.arcs) {
        arcs.emplace_back(min_vertex(d.vertices[u]), min_vertex(d.vertices[v]));
      }
      s.vertices.push_back(key);
      vertex_arcs.push_back(std::move(arcs));
    } else if (key.dim == 1) {
      s.edge_faces.push_back(key);
    }
  }

  for (const FaceKey& ek : s.edge_faces) {
    std::array<int, kMaxVertices + 1> block_index{};
    for (int b = 0; b < ek.blocks.block_count(); ++b) {
      for (int v : to_vertices(ek.blocks.blocks[b])) block_index[v] = b;
    }
    Digraph d = face_quotient(g, ek);
    std::vector<Mask> reach =
        reachability(static_cast<int>(d.vertices.size()), d.arcs);

    std::vector<int> ends;
    for (int vi = 0; vi < static_cast<int>(s.vertices.size()); ++vi) {
      bool inside = true;
      for (auto [p, q] : vertex_arcs[vi]) {
        int bp = block_index[p], bq = block_index[q];
        if (bp != bq && !(reach[bp] >> bq & 1u)) {
          inside = false;
          break;
        }
      }
      if (inside) ends.push_back(vi);
    }
    if (ends.size() != 2) {
      throw InternalError("1-face with " + std::to_string(ends.size()) +
                          " incident vertices");
    }
    s.edges.emplace_back(ends[0], ends[1]);
  }
  return s;
}

std::vector<int> vertex_coordinates(const Hypergraph& g, const FaceKey& key) {
  if (key.dim != 0) {
    throw InputError("vertex coordinates require a 0-dimensional face");
  }
  std::vector<int> coords(g.n, 0);
  for (const auto& [idx, h] : key.heads) {
    if (popcount(h) != 1) {
      throw InternalError("0-face with a non-singleton head");
    }
    ++coords[min_vertex(h) - 1];
  }
  return coords;
}

long long normalized_volume(const Hypergraph& g) {
  int len = g.n - 1;
  if (len < 0) return 0;
  if (len == 0) return 1;
  long long count = 0;
  // best[u] = largest sub-multiset of the prefix with union u; a new edge is
  // admissible when every extended sub-multiset still covers size + 1.
  std::map<Mask, int> best{{Mask{0}, 0}};
  auto rec = [&](auto&& self, int pos, const std::map<Mask, int>& cur) -> void {
    if (pos == len) {
      ++count;
      return;
    }
    for (Mask e : g.edges) {
      std::map<Mask, int> next = cur;
      bool ok = true;
      for (const auto& [u, sz] : cur) {
        Mask nu = u | e;
        if (popcount(nu) < sz + 2) {
          ok = false;
          break;
        }
        auto [it, fresh] = next.emplace(nu, sz + 1);
        if (!fresh && it->second < sz + 1) it->second = sz + 1;
      }
      if (ok) self(self, pos + 1, next);
    }
  };
  rec(rec, 0, best);
  return count;
}

AntipodeResult antipode_from_faces(const Hypergraph& g, int limit) {
  std::vector<Flat> all = flats(g, limit);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    index.emplace(all[i].edge_indices, i);
  }
  std::vector<long long> euler(all.size(), 0);
  for (const FaceKey& key : enumerate_faces(g, limit)) {
    euler[index.at(key.flat.edge_indices)] += (key.dim % 2 == 0) ? 1 : -1;
  }
  long long outer = (g.n % 2 == 0) ? 1 : -1;
  AntipodeResult r;
  for (std::size_t i = 0; i < all.size(); ++i) {
    r.coefficients.emplace_back(std::move(all[i]), outer * euler[i]);
  }
  return r;
}

}  // namespace hgpoly
