#pragma once
#include <cassert>
#include <map>
#include <vector>

#include "wba/check.hpp"
#include "wba/rational.hpp"

/*
 * Incremental sparse row reduction over exact rationals with a caller-chosen
 * pivot preference order on columns.
 *
 * Invariant kept at all times: every stored pivot row is normalized (pivot
 * coefficient 1) and fully inter-reduced, i.e. contains no other pivot
 * column.  Consequently reduce() needs a single elimination pass and its
 * result is supported on free columns only -- that is exactly the canonical
 * coset representative used for module straightening.
 */

namespace wba {

using SparseRow = std::map<int, Rat>;

class Echelon {
 public:
  Echelon() = default;  // unusable until assigned from a real column order

  // pos[c] = preference position of column c; lower = preferred as pivot
  explicit Echelon(std::vector<int> col_order) {
    int m = (int)col_order.size();
    pos_.assign(m, -1);
    for (int i = 0; i < m; ++i) {
      ensure(col_order[i] >= 0 && col_order[i] < m && pos_[col_order[i]] < 0,
             "column order is a permutation");
      pos_[col_order[i]] = i;
    }
  }

  int rank() const { return (int)pivots_.size(); }
  bool is_pivot(int c) const { return pivots_.count(c) > 0; }

  // returns true when the row was independent (rank grew)
  bool add_row(SparseRow row) {
    eliminate(row);
    if (row.empty()) return false;
    int lead = lead_column(row);
    Rat inv = 1 / row.at(lead);
    for (auto& [c, v] : row) v *= inv;
    // restore the inter-reduction invariant on older rows
    for (auto& [pc, pr] : pivots_) {
      auto it = pr.find(lead);
      if (it == pr.end()) continue;
      Rat coef = it->second;
      pr.erase(it);
      for (auto& [c, v] : row) {
        if (c == lead) continue;
        Rat& x = pr[c];
        x -= coef * v;
        if (x == 0) pr.erase(c);
      }
    }
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  // canonical representative of v modulo the row space (free columns only)
  SparseRow reduce(SparseRow v) const {
    eliminate(v);
    return v;
  }

  std::vector<int> pivot_columns() const {
    std::vector<int> out;
    for (auto& [c, r] : pivots_) out.push_back(c);
    return out;
  }

 private:
  void eliminate(SparseRow& row) const {
    // snapshot: substitution introduces free columns only (invariant)
    std::vector<int> hit;
    for (auto& [c, v] : row)
      if (pivots_.count(c)) hit.push_back(c);
    for (int c : hit) {
      Rat coef = row.at(c);
      row.erase(c);
      for (auto& [d, v] : pivots_.at(c)) {
        if (d == c) continue;
        Rat& x = row[d];
        x -= coef * v;
        if (x == 0) row.erase(d);
      }
    }
  }

  int lead_column(const SparseRow& row) const {
    int best = -1;
    for (auto& [c, v] : row)
      if (best < 0 || pos_[c] < pos_[best]) best = c;
    return best;
  }

  std::vector<int> pos_;
  std::map<int, SparseRow> pivots_;
};

/*
 * Rank of a sparse matrix without the inter-reduction bookkeeping (cheaper;
 * used for boundary maps where only ranks matter).  Forward elimination with
 * rows kept in echelon form keyed by leading column.
 */
class RankOnly {
 public:
  bool add_row(SparseRow row) {
    while (!row.empty()) {
      int lead = row.begin()->first;  // natural column order suffices here
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        Rat inv = 1 / row.begin()->second;
        for (auto& [c, v] : row) v *= inv;
        rows_.emplace(lead, std::move(row));
        return true;
      }
      Rat coef = row.begin()->second;
      for (auto& [c, v] : it->second) {
        Rat& x = row[c];
        x -= coef * v;
        if (x == 0) row.erase(c);
      }
    }
    return false;
  }
  int rank() const { return (int)rows_.size(); }

 private:
  std::map<int, SparseRow> rows_;
};

}  // namespace wba
