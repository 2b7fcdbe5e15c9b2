#pragma once
#include <algorithm>
#include <cassert>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "wba/check.hpp"
#include "wba/colored_permutation.hpp"
#include "wba/rational.hpp"
#include "wba/rewriting.hpp"
#include "wba/sparse_rref.hpp"

/*
 * Presented modules on colored words.
 *
 * Exterior module: generators wedge(s) for s in S_mu, relations for every
 * word and every adjacent position,
 *   same color:  (.. x^i y^i ..) + (.. y^i x^i ..)
 *   mixed:       (.. x^i y^j ..) + (.. y^j x^i ..) + (.. y^i x^j ..)
 *                                + (.. x^j y^i ..)
 * The ascent-free words survive as a basis of the quotient; the relation
 * matrix has full expected rank |S_mu| - #(ascent-free), checked at build.
 *
 * Symmetric module: same generators, relations  w - w' with either the two
 * letters swapped (colors staying put) or the two colors swapped (letters
 * staying put).  Everything is identified; the quotient is one-dimensional
 * and letter-relabeling acts trivially.
 */

namespace wba {

using Vec = std::map<int, Rat>;  // generator id -> coefficient

struct PresentedModule {
  WeakComposition mu;
  std::vector<ColoredPermutation> gens;     // lex order, ids = positions
  std::unordered_map<uint64_t, int> index;  // encode_word -> id
  std::vector<int> basis;                   // ids of surviving generators
  Echelon ech;                              // row space of the relations

  int gen_id(const ColoredPermutation& s) const {
    auto it = index.find(encode_word(s));
    assert(it != index.end());
    return it->second;
  }
  int dim() const { return (int)basis.size(); }
};

namespace detail {

// column order: surviving generators last, so reduce() rewrites into them
inline std::vector<int> column_order(int m, const std::vector<char>& keep) {
  std::vector<int> order;
  order.reserve(m);
  for (int c = 0; c < m; ++c)
    if (!keep[c]) order.push_back(c);
  for (int c = 0; c < m; ++c)
    if (keep[c]) order.push_back(c);
  return order;
}

}  // namespace detail

inline PresentedModule build_exterior_module(const WeakComposition& mu) {
  PresentedModule M;
  M.mu = mu;
  M.gens = enumerate_colored_permutations(mu);
  int m = (int)M.gens.size();
  M.index.reserve(2 * m);
  for (int i = 0; i < m; ++i) M.index[encode_word(M.gens[i])] = i;

  std::vector<char> keep(m, 0);
  for (int i = 0; i < m; ++i)
    if (is_ascent_free(M.gens[i])) {
      keep[i] = 1;
      M.basis.push_back(i);
    }
  M.ech = Echelon(detail::column_order(m, keep));

  // every relation has all-ones coefficients, so dedup by support
  std::set<std::vector<int>> seen;
  for (int i = 0; i < m; ++i) {
    const ColoredPermutation& w = M.gens[i];
    for (int p = 1; p < w.n(); ++p) {
      auto [x, ci] = w.w[p - 1];
      auto [y, cj] = w.w[p];
      std::vector<int> support{i};
      ColoredPermutation a = w;
      a.w[p - 1] = {y, cj};
      a.w[p] = {x, ci};
      support.push_back(M.gen_id(a));
      if (ci != cj) {
        ColoredPermutation b = w;
        b.w[p - 1] = {y, ci};
        b.w[p] = {x, cj};
        support.push_back(M.gen_id(b));
        ColoredPermutation c = w;
        c.w[p - 1] = {x, cj};
        c.w[p] = {y, ci};
        support.push_back(M.gen_id(c));
      }
      std::sort(support.begin(), support.end());
      support.erase(std::unique(support.begin(), support.end()),
                    support.end());
      if (!seen.insert(support).second) continue;
      SparseRow row;
      for (int col : support) row[col] = 1;
      M.ech.add_row(std::move(row));
    }
  }
  ensure((int)M.ech.rank() == m - (int)M.basis.size(),
         "exterior relation rank != #gens - #ascent-free for mu=" + mu.str());
  return M;
}

inline PresentedModule build_symmetric_module(const WeakComposition& mu) {
  PresentedModule M;
  M.mu = mu;
  M.gens = enumerate_colored_permutations(mu);
  int m = (int)M.gens.size();
  M.index.reserve(2 * m);
  for (int i = 0; i < m; ++i) M.index[encode_word(M.gens[i])] = i;

  // only the lex-least word survives
  std::vector<char> keep(m, 0);
  keep[0] = 1;
  M.basis.push_back(0);
  M.ech = Echelon(detail::column_order(m, keep));

  for (int i = 0; i < m; ++i) {
    const ColoredPermutation& w = M.gens[i];
    for (int p = 1; p < w.n(); ++p) {
      ColoredPermutation b = w;  // letters swapped, colors stay
      std::swap(b.w[p - 1].first, b.w[p].first);
      ColoredPermutation c = w;  // colors swapped, letters stay
      std::swap(c.w[p - 1].second, c.w[p].second);
      for (const ColoredPermutation* other : {&b, &c}) {
        int j = M.gen_id(*other);
        if (j == i) continue;
        SparseRow row;
        row[i] = 1;
        row[j] = -1;
        M.ech.add_row(std::move(row));
      }
    }
  }
  ensure(M.ech.rank() == m - 1,
         "symmetric module is not one-dimensional for mu=" + mu.str());
  return M;
}

// expansion of a generator in the surviving basis
inline Vec straighten(const PresentedModule& M, const ColoredPermutation& s) {
  SparseRow row;
  row[M.gen_id(s)] = 1;
  return M.ech.reduce(std::move(row));
}

// letter-relabeling action of tau on a basis-expanded vector
inline Vec act(const PresentedModule& M, const std::vector<int>& tau,
               const Vec& v) {
  Vec out;
  for (auto& [id, coef] : v) {
    Vec img = straighten(M, act_letters(tau, M.gens[id]));
    for (auto& [col, c] : img) {
      Rat& slot = out[col];
      slot += coef * c;
      if (slot == 0) out.erase(col);
    }
  }
  return out;
}

inline Rat module_trace(const PresentedModule& M, const std::vector<int>& tau) {
  Rat tr = 0;
  for (int id : M.basis) {
    Vec img = straighten(M, act_letters(tau, M.gens[id]));
    auto it = img.find(id);
    if (it != img.end()) tr += it->second;
  }
  return tr;
}

/*
 * Rank of the full relation matrix alone, without the basis-preserving
 * echelon form.  Columns are ordered by increasing rewrite measure, which
 * makes the unique letter-ascending term of each relation its leading
 * entry; elimination then mirrors the oriented rewriting system and fill-in
 * stays near the normal-form supports instead of exploding.
 */
inline long long exterior_relation_rank(const WeakComposition& mu) {
  std::vector<ColoredPermutation> gens = enumerate_colored_permutations(mu);
  int m = (int)gens.size();
  std::unordered_map<uint64_t, int> index;
  index.reserve(2 * m);
  for (int i = 0; i < m; ++i) index[encode_word(gens[i])] = i;

  std::vector<int> ids(m);
  for (int i = 0; i < m; ++i) ids[i] = i;
  std::vector<long long> meas(m);
  for (int i = 0; i < m; ++i) meas[i] = rewrite_measure(gens[i]);
  std::stable_sort(ids.begin(), ids.end(),
                   [&](int a, int b) { return meas[a] < meas[b]; });
  std::vector<int> pos(m);
  for (int r = 0; r < m; ++r) pos[ids[r]] = r;

  RankOnly rank;
  std::set<std::vector<int>> seen;
  for (int i = 0; i < m; ++i) {
    const ColoredPermutation& w = gens[i];
    for (int p = 1; p < w.n(); ++p) {
      auto [x, ci] = w.w[p - 1];
      auto [y, cj] = w.w[p];
      std::vector<int> support{pos[i]};
      ColoredPermutation a = w;
      a.w[p - 1] = {y, cj};
      a.w[p] = {x, ci};
      support.push_back(pos[index.at(encode_word(a))]);
      if (ci != cj) {
        ColoredPermutation b = w;
        b.w[p - 1] = {y, ci};
        b.w[p] = {x, cj};
        support.push_back(pos[index.at(encode_word(b))]);
        ColoredPermutation c = w;
        c.w[p - 1] = {x, cj};
        c.w[p] = {y, ci};
        support.push_back(pos[index.at(encode_word(c))]);
      }
      std::sort(support.begin(), support.end());
      support.erase(std::unique(support.begin(), support.end()),
                    support.end());
      if (!seen.insert(support).second) continue;
      SparseRow row;
      for (int col : support) row[col] = 1;
      rank.add_row(std::move(row));
    }
  }
  return (long long)rank.rank();
}

/*
 * Character of the exterior module on a cycle-type representative, computed
 * by whichever straightener is cheaper.  The two engines agree wherever both
 * run (asserted in the test suite); the rewriting route exists because the
 * relation matrix for contents like (1,1,1,1,1) is large while the oriented
 * rewriting system stays tiny per word.  The cutover keeps every content of
 * size <= 4 on the linear route.
 */
inline constexpr int kLinearStraightenLimit = 600;

inline std::vector<long long> exterior_character_values(
    const WeakComposition& mu, const std::vector<std::vector<int>>& taus) {
  // |S_mu| = n! * multinomial(n; mu): letters in any order, colors any
  // arrangement of the content multiset
  int n = mu.size();
  long long count = 1;
  for (int i = 2; i <= n; ++i) count *= (long long)i * i;
  for (int p : mu.parts)
    for (int i = 2; i <= p; ++i) count /= i;
  std::vector<long long> vals;
  vals.reserve(taus.size());
  if (count <= kLinearStraightenLimit) {
    PresentedModule M = build_exterior_module(mu);
    for (auto& tau : taus) {
      Rat tr = module_trace(M, tau);
      ensure(tr.get_den() == 1, "non-integral exterior trace");
      vals.push_back((long long)tr.get_num().get_si());
    }
  } else {
    NormalFormTable T = build_normal_forms(mu);
    for (auto& tau : taus) vals.push_back(rewriting_trace(T, tau));
  }
  return vals;
}

}  // namespace wba
