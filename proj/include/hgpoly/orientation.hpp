#pragma once

#include <utility>
#include <vector>

#include "hgpoly/flats.hpp"

namespace hgpoly {

/// One head per edge: a nonempty proper subset of that edge. For a plain
/// hypergraph heads are vertex masks; for a contracted hypergraph they are
/// block-index masks.
struct Orientation {
  std::vector<Mask> heads;

  bool operator==(const Orientation&) const = default;
};

/// Quotient digraph: vertices are blocks of {1..n} (given as vertex masks),
/// arcs run from head blocks to tail blocks. Arcs whose endpoints land in
/// the same block are not stored as loops; they are counted as cycle
/// witnesses.
struct Digraph {
  std::vector<Mask> vertices;
  std::vector<std::pair<int, int>> arcs;  // deduplicated, sorted
  int cycle_witnesses = 0;
};

namespace detail {

/// Nonempty proper subsets of `edge` in increasing mask order.
std::vector<Mask> proper_head_choices(Mask edge);

template <typename Fn>
void orientations_rec(const std::vector<Mask>& edge_masks, std::size_t i,
                      Orientation& scratch, Fn& fn) {
  if (i == edge_masks.size()) {
    fn(const_cast<const Orientation&>(scratch));
    return;
  }
  Mask edge = edge_masks[i];
  Mask head = 0;
  do {
    head = (head - edge) & edge;
    if (head == 0 || head == edge) {
      if (head == 0) break;
      continue;
    }
    scratch.heads.push_back(head);
    orientations_rec(edge_masks, i + 1, scratch, fn);
    scratch.heads.pop_back();
  } while (true);
}

/// Block count of the quotient of an acyclic orientation, or -1 on a cycle.
/// Allocation-free; `n` is the number of ground elements (<= kMaxVertices).
int acyclic_block_count(int n, const std::vector<Mask>& edges, const Mask* heads);

}  // namespace detail

/// The Cartesian product of head choices over edges, each orientation exactly
/// once: edges in canonical order, heads in subset-rank order, later edges
/// varying fastest. The Orientation passed to `fn` is reused between calls.
template <typename Fn>
void for_each_orientation(const std::vector<Mask>& edge_masks, Fn&& fn) {
  Orientation scratch;
  scratch.heads.reserve(edge_masks.size());
  detail::orientations_rec(edge_masks, 0, scratch, fn);
}

/// Number of acyclic orientations of a contracted hypergraph, by direct
/// enumeration over all head choices.
long long count_acyclic_orientations(const ContractedHypergraph& h);

std::vector<Orientation> orientations(const Hypergraph& g);
std::vector<Orientation> orientations(const ContractedHypergraph& h);

/// Blocks of {1..n} under the transitive head-overlap merge, plus the arc set.
std::pair<SetPartition, Digraph> orientation_quotient(const Hypergraph& g,
                                                      const Orientation& o);
std::pair<SetPartition, Digraph> orientation_quotient(const ContractedHypergraph& h,
                                                      const Orientation& o);

bool is_acyclic(const Digraph& d);
bool is_acyclic(const Hypergraph& g, const Orientation& o);
bool is_acyclic(const ContractedHypergraph& h, const Orientation& o);

/// The canonical name of one face of P_G: a flat plus a head per non-flat
/// edge (stored against original edge indices, as vertex masks saturated to
/// the head blocks), with the derived merged block partition and face
/// dimension n - |blocks|.
struct FaceKey {
  Flat flat;
  std::vector<std::pair<int, Mask>> heads;  // sorted by edge index
  SetPartition blocks;
  int dim = 0;

  bool operator==(const FaceKey& o) const {
    return flat == o.flat && heads == o.heads;
  }
  bool operator<(const FaceKey& o) const {
    if (flat.edge_indices != o.flat.edge_indices)
      return flat.edge_indices < o.flat.edge_indices;
    return heads < o.heads;
  }
};

/// The Omega surjection: composition -> face. The flat is G|_A; each
/// remaining edge is oriented toward its earliest part.
FaceKey omega(const Hypergraph& g, const SetComposition& a);

/// The canonical section Psi: repeatedly removes the source block of the
/// remaining quotient digraph whose minimum element is maximal, emitting the
/// blocks of key.blocks as parts. Throws InputError on a cyclic key.
SetComposition psi(const Hypergraph& g, const FaceKey& key);

/// The cone-normalization loop: given any family K(U) of nonempty subsets
/// K(U) of each edge U (indexed like g.edges), contracts saturated edges
/// into the flat, reads off the orientation and absorbs directed cycles
/// until acyclic. The represented normal cone is unchanged throughout.
FaceKey normalize_cone(const Hypergraph& g, const std::vector<Mask>& family);

/// Quotient digraph of a face key on key.blocks.
Digraph face_quotient(const Hypergraph& g, const FaceKey& key);

/// True iff face(a) is contained in face(b), i.e. cone(b) is contained in
/// cone(a): a's blocks refine b's and every quotient arc of a is implied by
/// reachability in b's quotient digraph.
bool is_subface(const Hypergraph& g, const FaceKey& a, const FaceKey& b);

}  // namespace hgpoly
