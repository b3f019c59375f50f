#include "hgpoly/types.hpp"

#include <algorithm>

namespace hgpoly {

std::vector<int> to_vertices(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(min_vertex(m));
    m &= m - 1;
  }
  return out;
}

Mask from_vertices(const std::vector<int>& vertices) {
  Mask m = 0;
  for (int v : vertices) m |= bit_of(v);
  return m;
}

void check_enumeration_limit(int n, int limit) {
  if (n > limit || n > kMaxVertices) {
    throw EnumerationLimitError("vertex count " + std::to_string(n) +
                                " exceeds the enumeration bound " +
                                std::to_string(std::min(limit, kMaxVertices)));
  }
}

}  // namespace hgpoly
