#pragma once

#include <vector>

#include "hgpoly/hopf.hpp"
#include "hgpoly/orientation.hpp"

namespace hgpoly {

/// Face counts by dimension, f_0 .. f_d with d = dim P_G. The polytope
/// itself is its own top face, so f_d = 1.
struct FVector {
  std::vector<long long> counts;

  bool operator==(const FVector&) const = default;
};

int polytope_dim(const Hypergraph& g);

/// The deduplicated image of omega over all set compositions, sorted by
/// (dim, canonical key).
std::vector<FaceKey> enumerate_faces(const Hypergraph& g, int limit = kDefaultEnumerationLimit);

FVector f_vector(const Hypergraph& g, int limit = kDefaultEnumerationLimit);

/// Transitive reduction of the reachability order of an acyclic digraph.
Digraph hasse_diagram(const Digraph& d);

/// True iff every vertex orientation of G has a forest Hasse diagram,
/// equivalently P_G is a simple polytope.
bool is_simple(const Hypergraph& g, int limit = kDefaultEnumerationLimit);

/// The faces covering `key` in the face lattice: one per Hasse edge of its
/// quotient digraph, obtained by absorbing that edge's two blocks into every
/// head meeting them and renormalizing. Empty for the top face.
std::vector<FaceKey> covering_faces(const Hypergraph& g, const FaceKey& key);

/// 0-faces plus the 1-faces joining them (indices into `vertices`).
struct Skeleton {
  std::vector<FaceKey> vertices;
  std::vector<FaceKey> edge_faces;
  std::vector<std::pair<int, int>> edges;  // per edge_face, its two endpoints
};

/// Throws InternalError if some 1-face has != 2 incident vertices.
Skeleton one_skeleton(const Hypergraph& g, int limit = kDefaultEnumerationLimit);

/// Minkowski-sum vertex of P_G named by a 0-dimensional key: coordinate i
/// counts the edges whose head is {i}.
std::vector<int> vertex_coordinates(const Hypergraph& g, const FaceKey& key);

/// Normalized volume of P_G for connected G: the number of draconian edge
/// sequences of length n-1 (every k of them must cover at least k+1
/// vertices), counted by backtracking.
long long normalized_volume(const Hypergraph& g);

/// Geometry-side antipode: coefficient of F is (-1)^n times the Euler
/// characteristic of the union of F's faces.
AntipodeResult antipode_from_faces(const Hypergraph& g, int limit = kDefaultEnumerationLimit);

}  // namespace hgpoly
