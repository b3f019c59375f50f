#pragma once

#include <vector>

#include "hgpoly/geometry.hpp"

namespace hgpoly {

/// A generalized Pitman-Stanley polytope: the Minkowski sum of the simplices
/// on the initial segments [a], a in A, with max(A) = n.
struct PSSpec {
  int n = 0;
  std::vector<int> a;  // sorted ascending, max element n
};

PSSpec make_ps_spec(int n, std::vector<int> a);

/// Edges {[a] : a in A, a >= 2}; a = 1 contributes only a translation and is
/// dropped.
Hypergraph ps_hypergraph(const PSSpec& spec);

/// Closed-form f-vector. Requires 1 not in A.
FVector ps_f_vector(const PSSpec& spec);

/// The uniform-gap specialization for n = mk+1, A = {k+1, 2k+1, ..., n},
/// evaluated through the multinomial form.
FVector ps_f_vector_arithmetic(int m, int k);

/// Length-`length` sequences over B whose increasing rearrangement b
/// satisfies b_i <= i-1. Brute force, capped at 1e7 candidates.
long long parking_count(int length, const std::vector<int>& b);

/// |Park_{n-1, Abar}| with Abar = {n - a : a in A}.
long long ps_volume(const PSSpec& spec);

/// True iff every f_j of PS_{m(p-1)+1, {(p-1)+1, ..., n}} with j < m(p-1) is
/// divisible by p. Throws InputError if p is not prime.
bool ps_mod_p_check(int p, int m);

/// All k-subsets of {1..n}; P_G is the hyper-permutahedron Pi_{n-1}(k-1).
Hypergraph hyperperm_hypergraph(int n, int k);

/// f-vector of the hyper-permutahedron by counting ordered pseudo-partitions
/// (A_0,...,A_p,B) with |B| <= k-1, |B|+|A_p| >= k and |B|+p+1 = n-j.
FVector opp_f_vector(int n, int k);

/// True iff the edges of g, together with all singletons, are union-closed
/// over intersecting pairs.
bool is_building_set(const Hypergraph& g);

}  // namespace hgpoly
