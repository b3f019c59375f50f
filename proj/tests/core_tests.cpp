#include <doctest.h>

#include <set>

#include "hgpoly/flats.hpp"
#include "hgpoly/hypergraph.hpp"
#include "hgpoly/partition.hpp"

using namespace hgpoly;

TEST_CASE("hypergraph construction and validation") {
  Hypergraph g = make_hypergraph(4, {{1, 2, 4}, {2, 3, 4}});
  CHECK(g.n == 4);
  CHECK(g.edges.size() == 2);

  CHECK(make_hypergraph(3, {}).edges.empty());
  CHECK(make_hypergraph(3, {{1, 2}, {2, 1}}).edges.size() == 1);

  CHECK_THROWS_AS(make_hypergraph(3, {{1}}), InputError);
  CHECK_THROWS_AS(make_hypergraph(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(make_hypergraph(3, {{1, 4}}), InputError);
  CHECK_THROWS_AS(make_hypergraph(3, {{0, 2}}), InputError);
  CHECK_THROWS_AS(make_hypergraph(-1, {}), InputError);
}

TEST_CASE("restriction keeps labels, standardize relabels") {
  Hypergraph g = make_hypergraph(3, {{1, 2, 3}, {2, 3}});
  Hypergraph r = restrict_to(g, from_vertices({2, 3}));
  CHECK(r.n == 3);
  CHECK(r.edges == std::vector<Mask>{from_vertices({2, 3})});

  CHECK(restrict_to(g, from_vertices({1, 2})).edges.empty());
  CHECK(restrict_to(g, full_mask(3)) == g);

  Hypergraph s = standardize(g, from_vertices({2, 3}));
  CHECK(s.n == 2);
  CHECK(s.edges == std::vector<Mask>{from_vertices({1, 2})});
}

TEST_CASE("component counts include isolated vertices") {
  CHECK(component_count(make_hypergraph(3, {})) == 3);
  CHECK(component_count(make_hypergraph(4, {{1, 2, 3}, {3, 4}})) == 1);
  CHECK(component_count(make_hypergraph(5, {{1, 2}, {3, 4}})) == 3);
  CHECK(component_count(make_hypergraph(0, {})) == 0);
}

TEST_CASE("set composition counts are Fubini numbers") {
  CHECK(fubini(0) == 1);
  CHECK(fubini(3) == 13);
  CHECK(fubini(4) == 75);
  CHECK(fubini(10) == 102247563);

  for (int n = 0; n <= 5; ++n) {
    long long count = 0;
    std::set<std::vector<Mask>> seen;
    for_each_set_composition(n, [&](const SetComposition& a) {
      ++count;
      seen.insert(a.parts);
      Mask all = 0;
      for (Mask p : a.parts) {
        CHECK(p != 0);
        CHECK((all & p) == 0);
        all |= p;
      }
      CHECK(all == full_mask(n));
    });
    CHECK(count == fubini(n));
    CHECK(static_cast<long long>(seen.size()) == count);  // no repeats
  }
  CHECK_THROWS_AS(set_compositions(11), EnumerationLimitError);
}

TEST_CASE("chunked composition enumeration covers the whole space") {
  int n = 4;
  long long total = 0;
  Mask full = full_mask(n);
  for (Mask first = 1; first <= full; ++first) {
    if ((first & ~full) != 0) continue;
    for_each_set_composition_starting(n, first, [&](const SetComposition& a) {
      CHECK(a.parts.front() == first);
      ++total;
    });
  }
  CHECK(total == fubini(n));
}

TEST_CASE("partitions pair with compositions through block factorials") {
  for (int n = 0; n <= 6; ++n) {
    long long weighted = 0;
    for_each_set_partition(n, [&](const SetPartition& p) {
      long long fact = 1;
      for (int i = 2; i <= p.block_count(); ++i) fact *= i;
      weighted += fact;
      for (int b = 1; b < p.block_count(); ++b) {
        CHECK(min_vertex(p.blocks[b - 1]) < min_vertex(p.blocks[b]));
      }
    });
    CHECK(weighted == fubini(n));
  }
}

TEST_CASE("flats of the paper examples") {
  Hypergraph g1 = make_hypergraph(3, {{1, 2, 3}, {2, 3}});
  auto f1 = flats(g1);
  REQUIRE(f1.size() == 3);
  CHECK(f1[0].edge_indices.empty());
  CHECK(f1[1].edge_indices == std::vector<int>{0});  // edge 0 = {2,3}
  CHECK(g1.edges[0] == from_vertices({2, 3}));
  CHECK(f1[2].edge_indices == std::vector<int>{0, 1});

  Hypergraph g2 = make_hypergraph(4, {{1, 2, 3}, {3, 4}});
  CHECK(flats(g2).size() == 4);

  CHECK(flats(make_hypergraph(3, {})).size() == 1);
}

TEST_CASE("every set partition induces a closed flat") {
  Hypergraph g = make_hypergraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  for_each_set_partition(4, [&](const SetPartition& p) {
    Flat f = induced_flat(g, p.blocks);
    CHECK(is_flat(g, f.edge_indices));
  });
  // Three edges of the 4-cycle connect everything, so the fourth edge breaks
  // closure.
  CHECK(is_flat(g, {0}));
  CHECK(is_flat(g, {0, 1}));
  CHECK_FALSE(is_flat(g, {0, 1, 2}));
}

TEST_CASE("contraction of the paper example") {
  Hypergraph g = make_hypergraph(3, {{1, 2, 3}, {2, 3}});
  Flat f = flat_from_edge_subset(g, {0});
  ContractedHypergraph h = contract(g, f);
  REQUIRE(h.block_count() == 2);
  CHECK(h.blocks.blocks[0] == from_vertices({1}));
  CHECK(h.blocks.blocks[1] == from_vertices({2, 3}));
  REQUIRE(h.edges.size() == 1);
  CHECK(popcount(h.edges[0]) == 2);
  CHECK(h.origin[0] == std::vector<int>{1});
}

TEST_CASE("empty contraction is the identity on edges") {
  Hypergraph g = make_hypergraph(4, {{1, 2, 4}, {2, 3, 4}});
  ContractedHypergraph h = contract(g, flat_from_edge_subset(g, {}));
  CHECK(h.block_count() == 4);
  CHECK(h.edges == g.edges);  // singleton blocks keep the bit layout
}

TEST_CASE("coinciding contracted images merge with shared origin") {
  Hypergraph g = make_hypergraph(4, {{1, 3}, {1, 4}, {3, 4}});
  // edge order after canonicalization: {1,3}=5, {3,4}=12? masks: {1,3}=0b101=5,
  // {1,4}=0b1001=9, {3,4}=0b1100=12 -> indices 0,1,2 as listed.
  Flat f = flat_from_edge_subset(g, {2});
  ContractedHypergraph h = contract(g, f);
  REQUIRE(h.edges.size() == 1);
  CHECK(h.origin[0] == std::vector<int>{0, 1});
}

TEST_CASE("contract rejects non-flats") {
  Hypergraph g = make_hypergraph(4, {{1, 2}, {2, 3}, {1, 2, 3}});
  CHECK_THROWS_AS(flat_from_edge_subset(g, {0, 1}), InputError);
  Flat bogus{{0, 1}, canonical_partition({from_vertices({1, 2, 3}), from_vertices({4})})};
  CHECK_THROWS_AS(contract(g, bogus), InputError);
}
