#include "hgpoly/partition.hpp"

#include <algorithm>

namespace hgpoly {

SetPartition canonical_partition(std::vector<Mask> blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](Mask a, Mask b) { return min_vertex(a) < min_vertex(b); });
  return SetPartition{std::move(blocks)};
}

int block_of(const SetPartition& p, int vertex) {
  for (int i = 0; i < p.block_count(); ++i) {
    if (contains(p.blocks[i], vertex)) return i;
  }
  return -1;
}

long long fubini(int n) {
  // Fub(n) = sum_k C(n,k) Fub(n-k).
  std::vector<long long> fub(n + 1, 0), binom(n + 1, 0);
  fub[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long c = 1;  // C(m, k)
    long long total = 0;
    for (int k = 1; k <= m; ++k) {
      c = c * (m - k + 1) / k;
      total += c * fub[m - k];
    }
    fub[m] = total;
  }
  return fub[n];
}

std::vector<SetComposition> set_compositions(int n, int limit) {
  check_enumeration_limit(n, limit);
  std::vector<SetComposition> out;
  for_each_set_composition(n, [&](const SetComposition& a) { out.push_back(a); });
  return out;
}

}  // namespace hgpoly
