#pragma once
#include <algorithm>
#include <cassert>
#include <map>
#include <vector>

#include "wba/chain_complex.hpp"
#include "wba/char_table.hpp"
#include "wba/check.hpp"
#include "wba/colored_permutation.hpp"
#include "wba/el_labeling.hpp"
#include "wba/poset.hpp"

/*
 * Character of the symmetric group on the top reduced cohomology of
 * (0-hat, [n]^mu), via the Hopf trace principle.  Homology is concentrated
 * in the top dimension (checked, not assumed), so for every group element
 *
 *   (-1)^(n-2) chi(g) = sum_d (-1)^d tr(g | C_d)
 *                     = -1 + sum_{s>=1} (-1)^(s-1) #(s-chains fixed by g),
 *
 * the -1 being the empty chain at dimension -1.  A chain fixed setwise is
 * fixed pointwise (ranks along a chain are distinct and the action is
 * rank-preserving), so each fixed chain contributes trace +1.
 */

namespace wba {

namespace detail {

// image of element id under the letter relabeling tau (weights untouched)
inline int act_element(const FinitePoset& p, const std::vector<int>& tau,
                       int id) {
  const WeightedSubset& e = p.elements[id];
  uint32_t mask = 0;
  for (int x : e.base_list(p.n))
    mask |= (uint32_t)1 << (tau[x - 1] - 1);
  WeightedSubset img{mask, e.weight};
  for (int j = 0; j < (int)p.elements.size(); ++j)
    if (p.elements[j] == img) return j;
  ensure(false, "group action left the poset");
  return -1;
}

}  // namespace detail

inline ClassFunction top_cohomology_character(int n,
                                              const WeakComposition& mu) {
  ensure(mu.size() == n, "content size does not match n");
  ClassFunction chi(n);
  if (n == 0) {
    chi.vals[0] = 1;  // empty open interval: reduced rank 1 in dim -1
    return chi;
  }
  if (n == 1) {
    chi.vals[0] = 1;  // trivial character of S_1, same convention
    return chi;
  }

  int k = std::max(1, mu.length());
  FinitePoset p = build_weighted_boolean(n, k);
  int bottom = 0, top = -1;
  uint32_t full = ((uint32_t)1 << n) - 1;
  for (int i = 0; i < (int)p.elements.size(); ++i)
    if (p.elements[i].base == full && p.elements[i].weight == mu) top = i;
  ensure(top >= 0, "interval top not found");
  Interval iv = closed_interval(p, bottom, top);
  ChainComplexQ complex = order_complex(p, iv);

  std::vector<long long> betti = reduced_betti(complex);
  for (int i = 0; i + 1 < (int)betti.size(); ++i)
    ensure(betti[i] == 0,
           "homology not concentrated in top dimension for mu=" + mu.str());

  std::vector<int> verts;
  for (int e : iv.members)
    if (e != iv.bottom && e != iv.top) verts.push_back(e);
  std::sort(verts.begin(), verts.end());

  for (size_t ci = 0; ci < chi.types.size(); ++ci) {
    std::vector<int> tau = cycle_type_representative(chi.types[ci]);
    // vertices fixed by tau; chains inside them, counted by size
    std::vector<int> fixed;
    for (int v : verts)
      if (detail::act_element(p, tau, v) == v) fixed.push_back(v);
    std::vector<long long> by_size(n, 0);  // by_size[s] = #chains of size s+1
    // DFS over the induced subposet; chains ascend by id
    std::vector<std::pair<int, int>> stack;  // (vertex, chain length so far)
    for (size_t i = 0; i < fixed.size(); ++i) stack.push_back({(int)i, 1});
    while (!stack.empty()) {
      auto [vi, len] = stack.back();
      stack.pop_back();
      ++by_size[len - 1];
      for (size_t j = vi + 1; j < fixed.size(); ++j)
        if (p.leq(fixed[vi], fixed[j])) stack.push_back({(int)j, len + 1});
    }
    long long s = -1;
    for (int l = 1; l <= n - 1; ++l)
      s += (l % 2 ? by_size[l - 1] : -by_size[l - 1]);
    chi.vals[ci] = to_rat(((n - 2) % 2 == 0) ? s : -s);
  }
  return chi;
}

/*
 * Independent presentation of the same top cohomology, used as a
 * cross-check at small n: generators are the maximal chains of the open
 * interval, and for every chain with one element missing the sum of all its
 * refinements is a relation (the image of the coboundary from codimension
 * one; the alternating sign is constant across the single refinable gap).
 */
struct TopCohomologyPresentation {
  std::vector<std::vector<int>> maximal;  // generators, id-ascending chains
  std::map<std::vector<int>, int> index;
  Echelon ech;     // row space of the refinement relations
  long long dim;   // #maximal - rank
};

inline TopCohomologyPresentation top_cohomology_presentation(
    const FinitePoset& p, const Interval& iv) {
  ChainComplexQ complex = order_complex(p, iv);
  TopCohomologyPresentation pr;
  int top_size = (int)complex.chains.size() - 1;
  pr.maximal = complex.chains[top_size];
  for (int i = 0; i < (int)pr.maximal.size(); ++i)
    pr.index[pr.maximal[i]] = i;

  std::vector<int> cols((int)pr.maximal.size());
  for (size_t i = 0; i < cols.size(); ++i) cols[i] = (int)i;
  pr.ech = Echelon(cols);

  if (top_size >= 1) {
    for (const auto& ch : complex.chains[top_size - 1]) {
      SparseRow row;
      for (int i = 0; i <= (int)ch.size(); ++i) {
        // gap between ch[i-1] (or interval bottom) and ch[i] (or top);
        // only the single rank-2 gap admits refinements
        int lo = (i == 0) ? iv.bottom : ch[i - 1];
        int hi = (i == (int)ch.size()) ? iv.top : ch[i];
        for (int v : iv.members) {
          if (v == iv.bottom || v == iv.top || v == lo || v == hi) continue;
          if (!(p.leq(lo, v) && p.leq(v, hi))) continue;
          auto refined = ch;
          refined.insert(refined.begin() + i, v);
          row[pr.index.at(refined)] += 1;
        }
      }
      pr.ech.add_row(std::move(row));
    }
  }
  pr.dim = (long long)pr.maximal.size() - (long long)pr.ech.rank();
  return pr;
}

}  // namespace wba
