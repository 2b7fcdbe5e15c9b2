#pragma once
#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <vector>

#include "wba/partition.hpp"

/*
 * Skew hooks (border strips / ribbons): connected skew shapes with no 2x2
 * square.  H(alpha) is encoded by the composition alpha of horizontal step
 * lengths read left to right; numbering its n cells left-to-right and
 * bottom-to-top, cell i+1 sits above cell i exactly at the proper partial
 * sums of alpha, which form the descent set of H.
 *
 * Standard Young tableaux here are in English convention (row 0 on top);
 * "entry i in a higher row than i+1" means row(i) < row(i+1).
 */

namespace wba {

struct SkewHook {
  Composition source;                       // alpha
  std::vector<std::pair<int, int>> cells;   // (row, col); row 0 visually lowest
  std::set<int> descent_set;                // proper partial sums of alpha
};

inline SkewHook skew_hook(const Composition& alpha) {
  assert(!alpha.empty());
  for (int a : alpha) { (void)a; assert(a >= 1); }
  SkewHook h;
  h.source = alpha;
  int acc = 0;
  for (size_t i = 0; i + 1 < alpha.size(); ++i) {
    acc += alpha[i];
    h.descent_set.insert(acc);
  }
  int n = weight(alpha);
  int row = 0, col = 0;
  for (int i = 1; i <= n; ++i) {
    h.cells.push_back({row, col});
    if (h.descent_set.count(i)) ++row;  // next cell above
    else ++col;                         // next cell to the right
  }
  return h;
}

// recover alpha from the descent set (round-trip check lives in the tests)
inline Composition composition_of_descents(int n, const std::set<int>& D) {
  Composition alpha;
  int prev = 0;
  for (int d : D) {
    alpha.push_back(d - prev);
    prev = d;
  }
  alpha.push_back(n - prev);
  return alpha;
}

// number of standard Young tableaux of (straight) shape lam whose descent set
// is exactly D, by backtracking over placements of 1..n
inline long long count_syt_with_descents(const Partition& lam,
                                         const std::set<int>& D) {
  int n = weight(lam);
  int rows = (int)lam.size();
  std::vector<int> fill(rows, 0);  // cells already filled per row
  std::vector<int> row_of(n + 1, -1);
  long long count = 0;
  auto rec = [&](auto&& self, int entry) -> void {
    if (entry > n) {
      ++count;  // every adjacent pair was checked at placement time
      return;
    }
    for (int r = 0; r < rows; ++r) {
      int c = fill[r];
      if (c >= lam[r]) continue;
      if (r > 0 && fill[r - 1] <= c) continue;  // column strictness
      // prune: descent status of (entry-1, entry) is already decided
      if (entry > 1) {
        bool des = row_of[entry - 1] < r;
        if (des != (bool)D.count(entry - 1)) continue;
      }
      fill[r] += 1;
      row_of[entry] = r;
      self(self, entry + 1);
      fill[r] -= 1;
    }
  };
  rec(rec, 1);
  return count;
}

// total SYT count by the hook length formula (independent oracle for tests)
inline long long syt_count_hook_length(const Partition& lam) {
  int n = weight(lam);
  std::vector<int> conj(lam.empty() ? 0 : lam[0], 0);
  for (int r = 0; r < (int)lam.size(); ++r)
    for (int c = 0; c < lam[r]; ++c) conj[c] += 1;
  long long numerator = factorial(n);
  long long denom = 1;
  for (int r = 0; r < (int)lam.size(); ++r)
    for (int c = 0; c < lam[r]; ++c)
      denom *= (lam[r] - c) + (conj[c] - r) - 1;
  return numerator / denom;
}

}  // namespace wba
