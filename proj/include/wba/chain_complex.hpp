#pragma once
#include <algorithm>
#include <cassert>
#include <map>
#include <vector>

#include "wba/check.hpp"
#include "wba/poset.hpp"
#include "wba/rational.hpp"
#include "wba/sparse_rref.hpp"

/*
 * Order complex of an open interval and reduced homology ranks over Q.
 *
 * Chains are stored per size s = 0..maxlen (size s <-> dimension s-1), with
 * the empty chain present at size 0 so that an empty open interval has
 * reduced homology of rank 1 in dimension -1.  Element ids ascend along any
 * chain: ids are assigned in (subset mask, weight) order, which refines the
 * poset order, so listing a chain by ascending id needs no further
 * orientation choice.
 */

namespace wba {

struct ChainComplexQ {
  // chains[s] = all chains with s elements, each ascending by element id;
  // chains[0] = { {} }.  Dimension of a size-s chain is s-1.
  std::vector<std::vector<std::vector<int>>> chains;

  int top_dimension() const { return (int)chains.size() - 2; }
};

inline ChainComplexQ order_complex(const FinitePoset& p,
                                   const Interval& iv) {
  std::vector<int> verts;
  for (int e : iv.members)
    if (e != iv.bottom && e != iv.top) verts.push_back(e);
  std::sort(verts.begin(), verts.end());

  ChainComplexQ c;
  c.chains.push_back({{}});
  std::vector<std::vector<int>> cur;
  for (int v : verts) cur.push_back({v});
  while (!cur.empty()) {
    c.chains.push_back(cur);
    std::vector<std::vector<int>> next;
    for (const auto& ch : cur)
      for (int v : verts) {
        if (v <= ch.back() || !p.leq(ch.back(), v)) continue;
        auto ext = ch;
        ext.push_back(v);
        next.push_back(std::move(ext));
      }
    cur = std::move(next);
  }
  return c;
}

// boundary of the size-s chain space into the size-(s-1) chain space,
// columns = size-s chains, standard alternating signs on the ascending ids
inline std::vector<SparseRow> boundary_columns(const ChainComplexQ& c,
                                               int s) {
  assert(s >= 1 && s < (int)c.chains.size());
  std::map<std::vector<int>, int> row_id;
  for (int i = 0; i < (int)c.chains[s - 1].size(); ++i)
    row_id[c.chains[s - 1][i]] = i;
  std::vector<SparseRow> cols;
  cols.reserve(c.chains[s].size());
  for (const auto& ch : c.chains[s]) {
    SparseRow col;
    for (int j = 0; j < s; ++j) {
      auto face = ch;
      face.erase(face.begin() + j);
      col[row_id.at(face)] += (j % 2 ? Rat(-1) : Rat(1));
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

inline size_t matrix_rank(std::vector<SparseRow> rows) {
  RankOnly r;
  for (auto& row : rows) r.add_row(std::move(row));
  return r.rank();
}

// reduced betti numbers, index i = dimension i-1 (so front() is beta_{-1})
inline std::vector<long long> reduced_betti(const ChainComplexQ& c) {
  int top = (int)c.chains.size() - 1;  // largest chain size
  std::vector<size_t> rk(top + 2, 0);  // rk[s] = rank of boundary C_s -> C_{s-1}
  for (int s = 1; s <= top; ++s) rk[s] = matrix_rank(boundary_columns(c, s));
  std::vector<long long> betti;
  for (int s = 0; s <= top; ++s)
    betti.push_back((long long)c.chains[s].size() - (long long)rk[s] -
                    (long long)rk[s + 1]);
  return betti;
}

// sanity hook for the complex: consecutive boundaries compose to zero
inline bool boundary_squares_to_zero(const ChainComplexQ& c) {
  for (int s = 2; s < (int)c.chains.size(); ++s) {
    auto d1 = boundary_columns(c, s);
    auto d2 = boundary_columns(c, s - 1);
    for (const auto& col : d1) {
      std::map<int, Rat> acc;
      for (auto& [mid, a] : col)
        for (auto& [lo, b] : d2[mid]) acc[lo] += a * b;
      for (auto& [lo, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

}  // namespace wba
