#include "hgpoly/hopf.hpp"

#include <algorithm>
#include <map>

namespace hgpoly {

long long AntipodeResult::coefficient_of(const std::vector<int>& flat_edges) const {
  for (const auto& [flat, c] : coefficients) {
    if (flat.edge_indices == flat_edges) return c;
  }
  throw InputError("no such flat in the antipode expansion");
}

bool AntipodeResult::operator==(const AntipodeResult& o) const {
  if (coefficients.size() != o.coefficients.size()) return false;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (!(coefficients[i].first == o.coefficients[i].first) ||
        coefficients[i].second != o.coefficients[i].second)
      return false;
  }
  return true;
}

Hypergraph hopf_product(const Hypergraph& g1, const Hypergraph& g2) {
  std::vector<Mask> edges = g1.edges;
  for (Mask e : g2.edges) edges.push_back(e << g1.n);
  return from_edge_masks(g1.n + g2.n, std::move(edges));
}

std::vector<std::pair<Hypergraph, Hypergraph>> coproduct_terms(const Hypergraph& g) {
  check_enumeration_limit(g.n, kMaxVertices);
  std::vector<std::pair<Hypergraph, Hypergraph>> out;
  Mask full = full_mask(g.n);
  for (Mask k = 0;; ++k) {
    out.emplace_back(standardize(g, k), standardize(g, full & ~k));
    if (k == full) break;
  }
  return out;
}

namespace {

// Zeroed accumulator over all flats of g, keyed by edge subset.
struct FlatTable {
  std::vector<Flat> flats;
  std::map<std::vector<int>, int> index;
  std::vector<long long> coeff;

  explicit FlatTable(const Hypergraph& g, int limit) : flats(hgpoly::flats(g, limit)) {
    coeff.assign(flats.size(), 0);
    for (int i = 0; i < static_cast<int>(flats.size()); ++i) {
      index.emplace(flats[i].edge_indices, i);
    }
  }

  AntipodeResult result() && {
    AntipodeResult r;
    for (std::size_t i = 0; i < flats.size(); ++i) {
      r.coefficients.emplace_back(std::move(flats[i]), coeff[i]);
    }
    return r;
  }
};

}  // namespace

AntipodeResult takeuchi_antipode(const Hypergraph& g, int limit) {
  FlatTable table(g, limit);
  for_each_set_composition(g.n, [&](const SetComposition& a) {
    Flat f = flat_from_composition(g, a);
    long long sign = (a.length() % 2 == 0) ? 1 : -1;
    table.coeff[table.index.at(f.edge_indices)] += sign;
  });
  return std::move(table).result();
}

AntipodeResult orientation_antipode_direct(const Hypergraph& g, int limit) {
  FlatTable table(g, limit);
  for (std::size_t fi = 0; fi < table.flats.size(); ++fi) {
    ContractedHypergraph h = contract(g, table.flats[fi]);
    long long total = 0;
    int k = h.block_count();
    for_each_orientation(h.edges, [&](const Orientation& o) {
      int blocks = detail::acyclic_block_count(k, h.edges, o.heads.data());
      if (blocks >= 0) total += (blocks % 2 == 0) ? 1 : -1;
    });
    table.coeff[fi] = total;
  }
  return std::move(table).result();
}

AntipodeResult orientation_antipode_grouped(const Hypergraph& g, int limit) {
  FlatTable table(g, limit);
  std::map<FaceKey, int> seen;  // face -> index of its flat
  for_each_set_composition(g.n, [&](const SetComposition& a) {
    FaceKey key = omega(g, a);
    int fi = table.index.at(key.flat.edge_indices);
    seen.emplace(std::move(key), fi);
  });
  for (const auto& [key, fi] : seen) {
    table.coeff[fi] += (key.blocks.block_count() % 2 == 0) ? 1 : -1;
  }
  return std::move(table).result();
}

long long orientation_product_bound(const ContractedHypergraph& h, long long cap) {
  long long prod = 1;
  for (Mask e : h.edges) {
    long long choices = (1LL << popcount(e)) - 2;
    if (prod > cap / std::max(choices, 1LL)) return cap;
    prod *= choices;
  }
  return std::min(prod, cap);
}

AntipodeResult orientation_antipode(const Hypergraph& g, int limit) {
  constexpr long long kDirectBudget = 4'000'000;
  check_enumeration_limit(g.n, limit);
  long long total = 0;
  for (const Flat& f : flats(g, limit)) {
    total += orientation_product_bound(contract(g, f), kDirectBudget);
    if (total >= kDirectBudget) {
      return orientation_antipode_grouped(g, limit);
    }
  }
  return orientation_antipode_direct(g, limit);
}

bool is_hyperforest(const Hypergraph& g) {
  // An edge closes a cycle exactly when two of its vertices are already
  // connected by the previous edges.
  SmallDsu dsu(g.n);
  for (Mask e : g.edges) {
    auto vs = to_vertices(e);
    for (std::size_t i = 1; i < vs.size(); ++i) {
      if (dsu.find(vs[i] - 1) == dsu.find(vs[0] - 1)) return false;
      for (std::size_t j = 1; j < i; ++j) {
        if (dsu.find(vs[i] - 1) == dsu.find(vs[j] - 1)) return false;
      }
    }
    for (std::size_t i = 1; i < vs.size(); ++i) dsu.unite(vs[0] - 1, vs[i] - 1);
  }
  return true;
}

long long hyperforest_coefficient(const ContractedHypergraph& h) {
  for (Mask e : h.edges) {
    if (popcount(e) % 2 != 0) return 0;
  }
  long long c = (component_count(h) % 2 == 0) ? 1 : -1;
  for (std::size_t i = 0; i < h.edges.size(); ++i) c *= -2;
  return c;
}

}  // namespace hgpoly
