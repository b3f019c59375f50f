#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hgpoly/flats.hpp"
#include "hgpoly/orientation.hpp"

namespace hgpoly {

/// Signed integer coefficients of the antipode, one per flat of G. Zero
/// coefficients are stored explicitly; flats are sorted canonically.
struct AntipodeResult {
  std::vector<std::pair<Flat, long long>> coefficients;

  long long coefficient_of(const std::vector<int>& flat_edges) const;
  bool operator==(const AntipodeResult& o) const;
};

/// mu: G2's edges shifted up by G1's vertex count and unioned with G1's.
Hypergraph hopf_product(const Hypergraph& g1, const Hypergraph& g2);

/// Delta: one term per ordered pair (K, complement), each side standardized;
/// 2^n terms in ascending K order.
std::vector<std::pair<Hypergraph, Hypergraph>> coproduct_terms(const Hypergraph& g);

/// Takeuchi's specialized formula: sum over all set compositions A of
/// (-1)^len(A) G|_A. The independent brute-force oracle.
AntipodeResult takeuchi_antipode(const Hypergraph& g, int limit = kDefaultEnumerationLimit);

/// Per-flat direct route: a(G/F) = sum over acyclic orientations O of G/F of
/// (-1)^{#blocks of [n]/O}. May be expensive for large edge sets.
AntipodeResult orientation_antipode_direct(const Hypergraph& g,
                                           int limit = kDefaultEnumerationLimit);

/// Omega-grouped route: deduplicates omega over all compositions and sums
/// signs per flat.
AntipodeResult orientation_antipode_grouped(const Hypergraph& g,
                                            int limit = kDefaultEnumerationLimit);

/// Direct route when every per-flat orientation product is small, grouped
/// route otherwise.
AntipodeResult orientation_antipode(const Hypergraph& g, int limit = kDefaultEnumerationLimit);

/// Product over the edges of H of (2^|edge| - 2), saturating at `cap`.
long long orientation_product_bound(const ContractedHypergraph& h, long long cap);

/// True iff g has no proper cycle (closed walk with distinct consecutive
/// vertices through pairwise-distinct hyperedges).
bool is_hyperforest(const Hypergraph& g);

/// Closed-form antipode coefficient of a hyperforest contraction:
/// (-1)^components * (-2)^edges when every contracted edge spans an even
/// number of blocks, else 0.
long long hyperforest_coefficient(const ContractedHypergraph& h);

}  // namespace hgpoly
