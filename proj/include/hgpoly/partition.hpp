#pragma once

#include <utility>
#include <vector>

#include "hgpoly/types.hpp"

namespace hgpoly {

/// An ordered sequence of nonempty disjoint masks whose union is {1..n}.
struct SetComposition {
  std::vector<Mask> parts;

  int length() const { return static_cast<int>(parts.size()); }
  bool operator==(const SetComposition&) const = default;
};

/// An unordered block decomposition of {1..n}; blocks are stored sorted by
/// minimum element so equality is structural.
struct SetPartition {
  std::vector<Mask> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  bool operator==(const SetPartition&) const = default;
  auto operator<=>(const SetPartition&) const = default;
};

/// Sorts a list of disjoint blocks into canonical (min-element) order.
SetPartition canonical_partition(std::vector<Mask> blocks);

/// Block index containing `vertex`, or -1.
int block_of(const SetPartition& p, int vertex);

long long fubini(int n);

namespace detail {

template <typename Fn>
void compositions_rec(Mask remaining, std::vector<Mask>& parts, Fn& fn) {
  if (remaining == 0) {
    fn(std::as_const(parts));
    return;
  }
  // Nonempty submasks of `remaining` in increasing numeric order.
  Mask part = 0;
  do {
    part = (part - remaining) & remaining;
    if (part == 0) break;
    parts.push_back(part);
    compositions_rec(remaining ^ part, parts, fn);
    parts.pop_back();
  } while (true);
}

}  // namespace detail

/// Every set composition of {1..n} exactly once, deterministic order: the
/// first part runs over nonempty subsets in ascending mask order, then
/// recursively on the complement. n = 0 yields the single empty composition.
/// Callers can parallelize by splitting on the first part.
template <typename Fn>
void for_each_set_composition(int n, Fn&& fn) {
  std::vector<Mask> parts;
  auto wrap = [&fn](const std::vector<Mask>& p) { fn(SetComposition{p}); };
  detail::compositions_rec(full_mask(n), parts, wrap);
}

/// The compositions whose first part is `first`, in the same order as the
/// corresponding chunk of for_each_set_composition.
template <typename Fn>
void for_each_set_composition_starting(int n, Mask first, Fn&& fn) {
  std::vector<Mask> parts{first};
  auto wrap = [&fn](const std::vector<Mask>& p) { fn(SetComposition{p}); };
  detail::compositions_rec(full_mask(n) ^ first, parts, wrap);
}

std::vector<SetComposition> set_compositions(int n, int limit = kDefaultEnumerationLimit);

/// Every set partition of {1..n} exactly once (restricted-growth order).
template <typename Fn>
void for_each_set_partition(int n, Fn&& fn) {
  std::vector<Mask> blocks;
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      fn(SetPartition{blocks});
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i] |= bit_of(v);
      self(self, v + 1);
      blocks[i] &= ~bit_of(v);
    }
    blocks.push_back(bit_of(v));
    self(self, v + 1);
    blocks.pop_back();
  };
  rec(rec, 1);
}

}  // namespace hgpoly
