#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgpoly {

// Vertex subsets of {1..n} as bitmasks: vertex v corresponds to bit (v-1).
using Mask = std::uint32_t;

// Hard representation cap (masks are 32-bit, enumeration is the real limit).
constexpr int kMaxVertices = 16;

// Default cap for the composition/partition/orientation enumerators.
// Fubini(10) is about 1.0e8; callers may override per invocation.
constexpr int kDefaultEnumerationLimit = 10;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return n == 0 ? 0u : (Mask{1} << n) - 1u; }
inline Mask bit_of(int vertex) { return Mask{1} << (vertex - 1); }
inline bool contains(Mask m, int vertex) { return (m >> (vertex - 1)) & 1u; }
// Smallest vertex label in a nonempty mask.
inline int min_vertex(Mask m) { return std::countr_zero(m) + 1; }

std::vector<int> to_vertices(Mask m);
Mask from_vertices(const std::vector<int>& vertices);

// Malformed caller input (bad edge, invalid flat, cyclic key, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request whose exhaustive enumeration exceeds the configured bound.
class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A violated internal invariant; indicates a bug, not bad input.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_enumeration_limit(int n, int limit);

// Union-find over at most kMaxVertices elements.
class SmallDsu {
 public:
  explicit SmallDsu(int n) : parent_{}, size_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }
  int size() const { return size_; }

 private:
  std::array<int, kMaxVertices> parent_;
  int size_;
};

}  // namespace hgpoly
