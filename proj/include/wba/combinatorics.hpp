#pragma once
#include <algorithm>
#include <cassert>
#include <vector>

#include "wba/partition.hpp"

/*
 * Statistics of uncolored permutations: the type partition lambda(tau)
 * (block sizes of the finest set partition of positions closed under taking
 * ascents together), descents, Eulerian polynomials.
 */

namespace wba {

// tau as a word tau(1..n), 1-based values.  Positions i, i+1 fall in the same
// block when tau(i) < tau(i+1); blocks are the maximal ascent runs, and
// lambda(tau) lists the block sizes in weakly decreasing order.
inline Partition type_partition(const std::vector<int>& tau) {
  int n = (int)tau.size();
  assert(n >= 1);
  Partition blocks;
  int run = 1;
  for (int i = 1; i < n; ++i) {
    if (tau[i - 1] < tau[i]) {
      ++run;
    } else {
      blocks.push_back(run);
      run = 1;
    }
  }
  blocks.push_back(run);
  return sort_to_partition(blocks);
}

inline int descent_count(const std::vector<int>& tau) {
  int d = 0;
  for (size_t i = 0; i + 1 < tau.size(); ++i)
    if (tau[i] > tau[i + 1]) ++d;
  return d;
}

// A_n(t) = sum over S_n of t^(des+1); index = power of t, degree n
inline std::vector<long long> eulerian_polynomial(int n) {
  assert(n >= 1);
  std::vector<long long> coeff(n + 1, 0);
  std::vector<int> tau(n);
  for (int i = 0; i < n; ++i) tau[i] = i + 1;
  do {
    coeff[descent_count(tau) + 1] += 1;
  } while (std::next_permutation(tau.begin(), tau.end()));
  return coeff;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> tau(n);
  for (int i = 0; i < n; ++i) tau[i] = i + 1;
  do {
    out.push_back(tau);
  } while (std::next_permutation(tau.begin(), tau.end()));
  return out;
}

}  // namespace wba
