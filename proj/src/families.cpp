#include "hgpoly/families.hpp"

#include <algorithm>
#include <cmath>

namespace hgpoly {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Ordered set partitions of an x-set into exactly r nonempty blocks.
long long ordered_partitions(int x, int r) {
  if (r < 0 || r > x) return 0;
  if (x == 0) return r == 0 ? 1 : 0;
  // r! * S(x, r) by inclusion-exclusion: sum_i (-1)^i C(r,i) (r-i)^x.
  long long total = 0;
  for (int i = 0; i <= r; ++i) {
    long long term = binomial(r, i);
    long long pow = 1;
    for (int t = 0; t < x; ++t) pow *= (r - i);
    total += (i % 2 == 0 ? 1 : -1) * term * pow;
  }
  return total;
}

// Coefficients of prod_i sum_a C(gaps[i]+1, a+1) t^a.
std::vector<long long> gap_polynomial_product(const std::vector<int>& gaps) {
  std::vector<long long> f{1};
  for (int gap : gaps) {
    std::vector<long long> poly(gap + 1);
    for (int a = 0; a <= gap; ++a) poly[a] = binomial(gap + 1, a + 1);
    std::vector<long long> next(f.size() + gap, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (int a = 0; a <= gap; ++a) next[i + a] += f[i] * poly[a];
    }
    f = std::move(next);
  }
  return f;
}

}  // namespace

PSSpec make_ps_spec(int n, std::vector<int> a) {
  if (n < 1 || a.empty()) {
    throw InputError("need n >= 1 and a nonempty generator set");
  }
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.front() < 1 || a.back() != n) {
    throw InputError("generators must lie in 1..n and include n");
  }
  return PSSpec{n, std::move(a)};
}

Hypergraph ps_hypergraph(const PSSpec& spec) {
  std::vector<Mask> edges;
  for (int a : spec.a) {
    if (a >= 2) edges.push_back(full_mask(a));
  }
  return from_edge_masks(spec.n, std::move(edges));
}

FVector ps_f_vector(const PSSpec& spec) {
  if (spec.a.front() == 1) {
    throw InputError("closed-form f-vector needs every generator >= 2");
  }
  std::vector<int> gaps;
  int prev = 1;
  for (int a : spec.a) {
    gaps.push_back(a - prev);
    prev = a;
  }
  return FVector{gap_polynomial_product(gaps)};
}

FVector ps_f_vector_arithmetic(int m, int k) {
  if (m < 1 || k < 1) {
    throw InputError("need m >= 1 and k >= 1");
  }
  // f_j = sum over weak compositions j = a_1 + ... + a_m of
  // prod_i C(k+1, a_i + 1), accumulated without forming the polynomial.
  int top = m * k;
  std::vector<long long> f(top + 1, 0);
  std::vector<int> alpha(m, 0);
  auto rec = [&](auto&& self, int i, int sum, long long prod) -> void {
    if (i == m) {
      f[sum] += prod;
      return;
    }
    for (int a = 0; a <= k; ++a) {
      self(self, i + 1, sum + a, prod * binomial(k + 1, a + 1));
    }
  };
  rec(rec, 0, 0, 1);
  return FVector{std::move(f)};
}

long long parking_count(int length, const std::vector<int>& b) {
  std::vector<int> values(b);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (length == 0) return 1;
  double tuples = std::pow(static_cast<double>(values.size()), length);
  if (tuples > 1e7) {
    throw EnumerationLimitError("parking-function search space exceeds 1e7");
  }
  long long count = 0;
  std::vector<int> pick(length, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == length) {
      std::vector<int> sorted(pick);
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < length; ++i) {
        if (sorted[i] > i) return;
      }
      ++count;
      return;
    }
    for (int v : values) {
      pick[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return count;
}

long long ps_volume(const PSSpec& spec) {
  std::vector<int> bar;
  for (int a : spec.a) bar.push_back(spec.n - a);
  return parking_count(spec.n - 1, bar);
}

bool ps_mod_p_check(int p, int m) {
  if (p < 2) throw InputError("modulus must be a prime");
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw InputError("modulus must be a prime");
  }
  if (m < 1) throw InputError("need m >= 1");
  int n = m * (p - 1) + 1;
  std::vector<int> a;
  for (int i = 1; i <= m; ++i) a.push_back(i * (p - 1) + 1);
  FVector f = ps_f_vector(make_ps_spec(n, std::move(a)));
  for (int j = 0; j < m * (p - 1); ++j) {
    if (f.counts[j] % p != 0) return false;
  }
  return true;
}

Hypergraph hyperperm_hypergraph(int n, int k) {
  if (k < 2 || k > n) {
    throw InputError("need 2 <= k <= n");
  }
  std::vector<Mask> edges;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    if (popcount(m) == k) edges.push_back(m);
  }
  return from_edge_masks(n, std::move(edges));
}

FVector opp_f_vector(int n, int k) {
  if (k < 2 || k > n) {
    throw InputError("need 2 <= k <= n");
  }
  // Faces of dimension j <-> tuples (A_0,...,A_p,B): |B| <= k-1,
  // |B| + |A_p| >= k and |B| + p + 1 = n - j.
  std::vector<long long> f(n, 0);
  for (int j = 0; j <= n - 1; ++j) {
    long long total = 0;
    for (int b = 0; b <= k - 1; ++b) {
      int p = n - j - b - 1;
      if (p < 0) continue;
      int s = n - b;
      long long inner = 0;
      for (int t = std::max(1, k - b); t <= s; ++t) {
        inner += binomial(s, t) * ordered_partitions(s - t, p);
      }
      total += binomial(n, b) * inner;
    }
    f[j] = total;
  }
  return FVector{std::move(f)};
}

bool is_building_set(const Hypergraph& g) {
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      if ((g.edges[i] & g.edges[j]) == 0) continue;
      Mask u = g.edges[i] | g.edges[j];
      if (!std::binary_search(g.edges.begin(), g.edges.end(), u)) return false;
    }
  }
  return true;
}

}  // namespace hgpoly
