#pragma once
#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

/*
 * Integer partitions and compositions.  A Partition is a weakly decreasing
 * vector<int> of positive parts; () is the empty partition of 0.  Partitions
 * double as cycle types of permutations and as keys of the monomial basis,
 * so they need a total order: std::vector's lexicographic < is used
 * throughout (no extra wrapper type).
 */

namespace wba {

using Partition = std::vector<int>;
using Composition = std::vector<int>;  // positive parts, order significant

inline int weight(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

inline bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

// parts sorted weakly decreasing: Composition -> Partition
inline Partition sort_to_partition(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  while (!v.empty() && v.back() == 0) v.pop_back();
  assert(is_partition(v));
  return v;
}

// all partitions of n with parts <= mx, in lexicographically decreasing order
// starting from (n) and ending at (1,...,1)
inline void partitions_rec(int n, int mx, Partition& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int f = std::min(n, mx); f >= 1; --f) {
    cur.push_back(f);
    partitions_rec(n - f, f, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Partition> partitions_of(int n, int max_part = -1) {
  assert(n >= 0);
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, max_part < 0 ? n : max_part, cur, out);
  return out;
}

// all compositions of n (ordered sequences of positive parts); n=0 -> {()}
inline std::vector<Composition> compositions_of(int n) {
  assert(n >= 0);
  if (n == 0) return {{}};
  std::vector<Composition> out;
  for (int f = 1; f <= n; ++f)
    for (auto& rest : compositions_of(n - f)) {
      Composition c{f};
      c.insert(c.end(), rest.begin(), rest.end());
      out.push_back(std::move(c));
    }
  return out;
}

inline std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

inline long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// |conjugacy class of cycle type gamma| in S_n = n! / z_gamma
inline long long class_size(const Partition& gamma) {
  int n = weight(gamma);
  long long z = 1;
  int run = 0, prev = 0;
  for (int p : gamma) {
    z *= p;
    run = (p == prev) ? run + 1 : 1;
    z *= run;  // accumulates m! for each multiplicity m incrementally
    prev = p;
  }
  return factorial(n) / z;
}

// canonical representative of cycle type gamma: consecutive cycles
// (1 2 .. g1)(g1+1 ..)...; tau[i] is the image of i+1, 1-based values
inline std::vector<int> cycle_type_representative(const Partition& gamma) {
  int n = weight(gamma);
  std::vector<int> tau(n);
  int start = 0;
  for (int part : gamma) {
    for (int t = 0; t < part; ++t) tau[start + t] = start + 1 + (t + 1) % part;
    start += part;
  }
  return tau;
}

}  // namespace wba
