#pragma once
#include <algorithm>
#include <cassert>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "wba/colored_permutation.hpp"

/*
 * Rewriting-based straightener for the colored exterior module: repeatedly
 * apply, at the first ascent, the defining relations oriented left-to-right,
 *
 *   same color:       x^i y^i  ->  - y^i x^i
 *   different colors: x^i y^j  ->  - y^j x^i - y^i x^j - x^j y^i
 *
 * until every term is ascent-free.  Termination: let M(w) = inv(letters) -
 * asc(colors) where both statistics count over ALL index pairs.  An adjacent
 * swap changes only the swapped pair's own contribution (the multiset seen
 * by any third position is unchanged), so per replacement term:
 *   y^i x^i : inv +1, colors unchanged            => M +1
 *   y^j x^i : inv +1, colors unchanged            => M +1
 *   y^i x^j : inv +1, color ascent lost           => M +2
 *   x^j y^i : inv unchanged, color ascent lost    => M +1
 * Every term strictly increases the bounded statistic M, so processing words
 * in decreasing M order makes each normal form depend only on earlier ones.
 *
 * All normal-form coefficients stay integral (observed: always in {-1,0,1});
 * the table is used as a fast trace engine for characters of large contents,
 * cross-checked against the linear-algebra straightener on small contents.
 */

namespace wba {

struct NormalFormTable {
  std::vector<ColoredPermutation> words;          // all of S_mu, lex order
  std::unordered_map<uint64_t, int> index;        // encode_word -> id
  std::vector<std::vector<std::pair<int, long long>>> nf;  // id -> expansion
  std::vector<int> ninc_ids;                      // ascent-free word ids
};

inline long long rewrite_measure(const ColoredPermutation& s) {
  long long inv = 0, casc = 0;
  for (int a = 1; a <= s.n(); ++a)
    for (int b = a + 1; b <= s.n(); ++b) {
      if (s.letter(a) > s.letter(b)) ++inv;
      if (s.color(a) < s.color(b)) ++casc;
    }
  return inv - casc;
}

inline NormalFormTable build_normal_forms(const WeakComposition& mu) {
  NormalFormTable t;
  t.words = enumerate_colored_permutations(mu);
  int m = (int)t.words.size();
  t.index.reserve(2 * m);
  for (int i = 0; i < m; ++i) t.index[encode_word(t.words[i])] = i;
  t.nf.resize(m);

  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::vector<long long> meas(m);
  for (int i = 0; i < m; ++i) meas[i] = rewrite_measure(t.words[i]);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return meas[a] > meas[b]; });

  std::unordered_map<int, long long> acc;
  for (int i : order) {
    const ColoredPermutation& w = t.words[i];
    auto asc = ascent_positions(w);
    if (asc.empty()) {
      t.nf[i] = {{i, 1}};
      t.ninc_ids.push_back(i);
      continue;
    }
    int p = asc.front();  // 1-based: swap positions p, p+1
    auto [x, ci] = w.w[p - 1];
    auto [y, cj] = w.w[p];
    std::vector<ColoredPermutation> reps;
    {
      ColoredPermutation a = w;
      a.w[p - 1] = {y, cj};
      a.w[p] = {x, ci};
      reps.push_back(a);  // swap both
    }
    if (ci != cj) {
      ColoredPermutation b = w;
      b.w[p - 1] = {y, ci};
      b.w[p] = {x, cj};
      reps.push_back(b);  // swap letters, keep color positions
      ColoredPermutation c = w;
      c.w[p - 1] = {x, cj};
      c.w[p] = {y, ci};
      reps.push_back(c);  // keep letters, swap colors
    }
    acc.clear();
    for (auto& r : reps) {
      int j = t.index.at(encode_word(r));
      assert(meas[j] > meas[i]);
      for (auto [col, v] : t.nf[j]) acc[col] -= v;
    }
    auto& out = t.nf[i];
    for (auto [col, v] : acc)
      if (v != 0) out.push_back({col, v});
    std::sort(out.begin(), out.end());
  }
  std::sort(t.ninc_ids.begin(), t.ninc_ids.end());
  return t;
}

// trace of the letter-relabeling action of tau in the ascent-free basis
inline long long rewriting_trace(const NormalFormTable& t,
                                 const std::vector<int>& tau) {
  long long tr = 0;
  for (int s : t.ninc_ids) {
    int img = t.index.at(encode_word(act_letters(tau, t.words[s])));
    for (auto [col, v] : t.nf[img])
      if (col == s) tr += v;
  }
  return tr;
}

}  // namespace wba
