#include <doctest.h>

#include <algorithm>
#include <set>

#include "hgpoly/geometry.hpp"
#include "hgpoly/orientation.hpp"

using namespace hgpoly;

namespace {
Mask M(std::vector<int> vs) { return from_vertices(vs); }
}  // namespace

TEST_CASE("head choices and orientation counts") {
  CHECK(detail::proper_head_choices(M({1, 2, 5})).size() == 6);
  CHECK(orientations(make_hypergraph(3, {{1, 2, 3}})).size() == 6);
  CHECK(orientations(make_hypergraph(4, {{1, 2, 4}, {2, 3, 4}})).size() == 36);
  CHECK(orientations(make_hypergraph(2, {})).size() == 1);
}

TEST_CASE("quotient digraph of a single oriented edge") {
  Hypergraph g = make_hypergraph(3, {{1, 2, 3}});
  auto [part, d] = orientation_quotient(g, Orientation{{M({1})}});
  CHECK(part.block_count() == 3);
  CHECK(d.arcs == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  CHECK(d.cycle_witnesses == 0);
}

TEST_CASE("acyclicity on the two-edge paper example") {
  Hypergraph g = make_hypergraph(4, {{1, 2, 4}, {2, 3, 4}});
  // Head {4} on {1,2,4} plus head {2,4} on {2,3,4}: 2 and 4 merge, and the
  // first edge then points from the {2,4} block back into itself via tail 2.
  CHECK_FALSE(is_acyclic(g, Orientation{{M({4}), M({2, 4})}}));
  CHECK(is_acyclic(g, Orientation{{M({4}), M({4})}}));

  int acyclic = 0;
  for (const Orientation& o : orientations(g)) {
    if (is_acyclic(g, o)) ++acyclic;
  }
  CHECK(acyclic == 20);
}

TEST_CASE("omega on the two-edge chain") {
  Hypergraph g = make_hypergraph(3, {{1, 2, 3}, {2, 3}});  // edge 0 = {2,3}

  FaceKey face23 = omega(g, SetComposition{{M({2, 3}), M({1})}});
  CHECK(face23.flat.edge_indices == std::vector<int>{0});
  REQUIRE(face23.heads.size() == 1);
  CHECK(face23.heads[0] == std::pair<int, Mask>{1, M({2, 3})});
  CHECK(face23.blocks.blocks == std::vector<Mask>{M({1}), M({2, 3})});
  CHECK(face23.dim == 1);

  FaceKey vertex = omega(g, SetComposition{{M({1}), M({2}), M({3})}});
  CHECK(vertex.flat.edge_indices.empty());
  CHECK(vertex.heads ==
        std::vector<std::pair<int, Mask>>{{0, M({2})}, {1, M({1})}});
  CHECK(vertex.dim == 0);

  FaceKey top = omega(g, SetComposition{{M({1, 2, 3})}});
  CHECK(top.flat.edge_indices == std::vector<int>{0, 1});
  CHECK(top.heads.empty());
  CHECK(top.dim == 2);
}

TEST_CASE("omega blocks refine the composition parts") {
  for (const Hypergraph& g :
       {make_hypergraph(4, {{1, 2, 4}, {2, 3, 4}}),
        make_hypergraph(4, {{1, 2, 3}, {3, 4}, {1, 2, 3, 4}})}) {
    for_each_set_composition(g.n, [&](const SetComposition& a) {
      FaceKey key = omega(g, a);
      for (Mask b : key.blocks.blocks) {
        bool inside_one_part = false;
        for (Mask p : a.parts) {
          if ((b & ~p) == 0) inside_one_part = true;
        }
        CHECK(inside_one_part);
      }
    });
  }
}

TEST_CASE("psi inverts omega face by face") {
  for (const Hypergraph& g :
       {make_hypergraph(3, {{1, 2, 3}, {2, 3}}),
        make_hypergraph(4, {{1, 2, 4}, {2, 3, 4}}),
        make_hypergraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}),
        make_hypergraph(5, {{1, 2, 3}, {3, 4, 5}, {1, 5}})}) {
    for (const FaceKey& key : enumerate_faces(g)) {
      SetComposition a = psi(g, key);
      CHECK(static_cast<int>(a.parts.size()) == key.blocks.block_count());
      std::vector<Mask> sorted_parts = a.parts;
      std::sort(sorted_parts.begin(), sorted_parts.end(),
                [](Mask x, Mask y) { return min_vertex(x) < min_vertex(y); });
      CHECK(sorted_parts == key.blocks.blocks);
      CHECK(omega(g, a) == key);
    }
  }
}

TEST_CASE("psi follows the max-min source rule") {
  Hypergraph g = make_hypergraph(3, {{1, 2, 3}, {2, 3}});
  FaceKey face23 = omega(g, SetComposition{{M({2, 3}), M({1})}});
  CHECK(psi(g, face23).parts == std::vector<Mask>{M({2, 3}), M({1})});

  // No arcs at all: every block is a source, so parts come out in
  // decreasing-minimum order.
  Hypergraph edgeless = make_hypergraph(4, {});
  FaceKey bottom = omega(edgeless, SetComposition{{M({1}), M({2}), M({3}), M({4})}});
  CHECK(psi(edgeless, bottom).parts ==
        std::vector<Mask>{M({4}), M({3}), M({2}), M({1})});
}

TEST_CASE("psi on a vertex of the 3-uniform hyper-permutahedron") {
  // The linear preorder 2 > 4 > 1 > {3,5} as an orientation of all 3-subsets
  // of {1..5}: each edge's head is its largest element, with the tie at the
  // bottom broken by the max-min rule into ({2},{4},{1},{5},{3}).
  Hypergraph g = make_hypergraph(
      5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {1, 4, 5},
          {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}});
  auto rank = [](int v) {
    switch (v) {
      case 2: return 4;
      case 4: return 3;
      case 1: return 2;
      default: return 1;  // 3 and 5 tie
    }
  };
  std::vector<Mask> family;
  for (Mask e : g.edges) {
    int best = 0;
    Mask head = 0;
    for (int v : to_vertices(e)) {
      if (rank(v) > best) {
        best = rank(v);
        head = M({v});
      } else if (rank(v) == best) {
        head |= M({v});
      }
    }
    family.push_back(head);
  }
  FaceKey key = normalize_cone(g, family);
  CHECK(key.dim == 0);
  CHECK(psi(g, key).parts ==
        std::vector<Mask>{M({2}), M({4}), M({1}), M({5}), M({3})});
}

TEST_CASE("psi rejects cyclic keys") {
  Hypergraph g = make_hypergraph(3, {{1, 2, 3}, {2, 3}});
  FaceKey bogus;
  bogus.flat = flat_from_edge_subset(g, {});
  bogus.heads = {{0, M({3})}, {1, M({2})}};  // 2 -> 3 -> 2
  bogus.blocks = canonical_partition({M({1}), M({2}), M({3})});
  bogus.dim = 0;
  CHECK_THROWS_AS(psi(g, bogus), InputError);
}

TEST_CASE("normalize_cone on the running example") {
  Hypergraph g = make_hypergraph(3, {{1, 2, 3}, {2, 3}});  // edge 0 = {2,3}
  FaceKey face23 = omega(g, SetComposition{{M({2, 3}), M({1})}});

  // Already-normal family: {2,3} saturates its edge, {1,2,3} keeps {2,3}.
  CHECK(normalize_cone(g, {M({2, 3}), M({2, 3})}) == face23);

  // Family with the cycle 2 -> 3 -> 2: resolving it saturates {2,3} and ends
  // at the same face.
  CHECK(normalize_cone(g, {M({2}), M({3})}) == face23);

  // A valid acyclic head assignment is a fixed point.
  FaceKey vertex = omega(g, SetComposition{{M({1}), M({2}), M({3})}});
  CHECK(normalize_cone(g, {M({2}), M({1})}) == vertex);

  CHECK_THROWS_AS(normalize_cone(g, {M({2, 3})}), InputError);
  CHECK_THROWS_AS(normalize_cone(g, {Mask{0}, M({2})}), InputError);
  CHECK_THROWS_AS(normalize_cone(g, {M({1}), M({1, 2, 3})}), InputError);
}

TEST_CASE("normalize_cone is idempotent and consistent with omega") {
  for (const Hypergraph& g :
       {make_hypergraph(3, {{1, 2, 3}, {2, 3}}),
        make_hypergraph(4, {{1, 2, 4}, {2, 3, 4}}),
        make_hypergraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})}) {
    for_each_set_composition(g.n, [&](const SetComposition& a) {
      FaceKey key = omega(g, a);
      std::vector<Mask> family(g.edges.size());
      for (int i : key.flat.edge_indices) family[i] = g.edges[i];
      for (const auto& [idx, h] : key.heads) family[idx] = h;
      CHECK(normalize_cone(g, family) == key);
    });
  }
}

TEST_CASE("subface order on a triangle") {
  Hypergraph g = make_hypergraph(3, {{1, 2, 3}});
  FaceKey v2 = normalize_cone(g, {M({2})});
  FaceKey v1 = normalize_cone(g, {M({1})});
  FaceKey e23 = normalize_cone(g, {M({2, 3})});
  FaceKey top = omega(g, SetComposition{{M({1, 2, 3})}});

  CHECK(is_subface(g, v2, e23));
  CHECK_FALSE(is_subface(g, v1, e23));
  CHECK_FALSE(is_subface(g, e23, v2));
  CHECK(is_subface(g, v1, top));
  CHECK(is_subface(g, e23, top));
  CHECK(is_subface(g, top, top));
  CHECK_FALSE(is_subface(g, v1, v2));
}

TEST_CASE("subface is a partial order with a unique top") {
  Hypergraph g = make_hypergraph(4, {{1, 2, 3}, {3, 4}});
  std::vector<FaceKey> faces = enumerate_faces(g);
  int tops = 0;
  for (const FaceKey& a : faces) {
    CHECK(is_subface(g, a, a));
    bool below_all = true;
    for (const FaceKey& b : faces) {
      bool ab = is_subface(g, a, b);
      bool ba = is_subface(g, b, a);
      if (ab && ba) CHECK(a == b);
      if (!ba) below_all = false;
      if (ab && a.dim > b.dim) CHECK(false);
    }
    if (below_all) ++tops;
  }
  CHECK(tops == 1);
}
