#pragma once
#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wba/check.hpp"
#include "wba/colored_permutation.hpp"
#include "wba/weak_composition.hpp"

/*
 * The weighted boolean algebra B_n^S: elements are weighted subsets B^mu
 * (B subseteq [n], mu a weak composition of |B| with support in S), with
 * covers A^nu < (A u {x})^(nu + e_r).  B-hat adds a synthetic top.
 *
 * FinitePoset materializes elements with integer ids, the cover digraph, a
 * rank function, and the full order relation as reachability bitmaps; desk
 * scale (a few hundred elements) keeps everything quadratic-friendly.
 */

namespace wba {

struct WeightedSubset {
  uint32_t base = 0;      // bitmask over letters 1..n (bit x-1 = letter x)
  WeakComposition weight;  // |weight| == popcount(base)

  std::vector<int> base_list(int n) const {
    std::vector<int> v;
    for (int x = 1; x <= n; ++x)
      if (base >> (x - 1) & 1) v.push_back(x);
    return v;
  }
  bool operator==(const WeightedSubset& o) const {
    return base == o.base && weight == o.weight;
  }
  bool operator<(const WeightedSubset& o) const {
    return base != o.base ? base < o.base : weight < o.weight;
  }
};

struct FinitePoset {
  int n = 0;                           // ground set size of the ambient B_n^S
  std::vector<WeightedSubset> elements;
  bool has_top = false;                // synthetic top is the last element
  std::vector<std::pair<int, int>> covers;  // (lower id, upper id)
  std::vector<int> rank;
  std::vector<std::vector<bool>> below;  // below[a][b] <=> a <= b

  int size() const { return (int)elements.size(); }
  int top_id() const {
    assert(has_top);
    return size() - 1;
  }
  bool is_top(int id) const { return has_top && id == size() - 1; }
  bool leq(int a, int b) const { return below[a][b]; }

  std::vector<int> upper_covers(int a) const {
    std::vector<int> out;
    for (auto [lo, hi] : covers)
      if (lo == a) out.push_back(hi);
    return out;
  }
  std::vector<int> lower_covers(int b) const {
    std::vector<int> out;
    for (auto [lo, hi] : covers)
      if (hi == b) out.push_back(lo);
    return out;
  }

  std::string element_str(int id) const {
    if (is_top(id)) return "1-hat";
    const auto& e = elements[id];
    std::string s = "{";
    bool first = true;
    for (int x : e.base_list(n)) {
      if (!first) s += ',';
      s += std::to_string(x);
      first = false;
    }
    s += "}^(";
    for (int j = 0; j < e.weight.length(); ++j) {
      if (j) s += ',';
      s += std::to_string(e.weight.parts[j]);
    }
    s += ")";
    return s;
  }
};

inline void compute_order_closure(FinitePoset& p) {
  int m = p.size();
  p.below.assign(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a) p.below[a][a] = true;
  // process elements by rank; covers point upward so a sweep in rank order
  // propagates reachability in one pass
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return p.rank[a] < p.rank[b]; });
  std::vector<std::vector<int>> up(m);
  for (auto [lo, hi] : p.covers) up[lo].push_back(hi);
  for (int i = m - 1; i >= 0; --i) {
    int a = order[i];
    for (int b : up[a])
      for (int c = 0; c < m; ++c)
        if (p.below[b][c]) p.below[a][c] = true;
  }
}

// B_n^S where S = [k]; elements sorted (base mask, then weight lex) so ids are
// deterministic.  Verifies purity: every cover raises rank by exactly one.
inline FinitePoset build_weighted_boolean(int n, int k) {
  if (k < 1) throw std::invalid_argument("color set must be nonempty");
  assert(n >= 0);
  FinitePoset p;
  p.n = n;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    int sz = __builtin_popcount(mask);
    for (auto& mu : enumerate_weak_compositions(sz, k))
      p.elements.push_back({mask, mu});
  }
  std::sort(p.elements.begin(), p.elements.end());
  std::map<WeightedSubset, int> id;
  for (int i = 0; i < p.size(); ++i) id[p.elements[i]] = i;

  p.rank.resize(p.size());
  for (int i = 0; i < p.size(); ++i)
    p.rank[i] = __builtin_popcount(p.elements[i].base);

  for (int i = 0; i < p.size(); ++i) {
    const auto& e = p.elements[i];
    for (int x = 1; x <= n; ++x) {
      if (e.base >> (x - 1) & 1) continue;
      for (int r = 1; r <= k; ++r) {
        WeightedSubset up{e.base | (1u << (x - 1)), e.weight.plus(r)};
        auto it = id.find(up);
        ensure(it != id.end(), "cover target exists");
        p.covers.push_back({i, it->second});
        ensure(p.rank[it->second] == p.rank[i] + 1, "covers raise rank by 1");
      }
    }
  }
  std::sort(p.covers.begin(), p.covers.end());
  compute_order_closure(p);

  // the order must agree with the componentwise definition
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      bool expect = (p.elements[a].base & ~p.elements[b].base) == 0 &&
                    leq_componentwise(p.elements[a].weight,
                                     p.elements[b].weight);
      ensure(p.below[a][b] == expect, "cover closure matches subset order");
    }
  return p;
}

inline FinitePoset add_top(const FinitePoset& p) {
  assert(!p.has_top);
  FinitePoset q = p;
  q.has_top = true;
  int t = q.size();
  q.elements.push_back({0, WeakComposition{}});  // payload unused for the top
  int rmax = 0;
  for (int r : q.rank) rmax = std::max(rmax, r);
  q.rank.push_back(rmax + 1);
  for (int i = 0; i < p.size(); ++i) {
    bool maximal = true;
    for (auto [lo, hi] : p.covers)
      if (lo == i) {
        (void)hi;
        maximal = false;
        break;
      }
    if (maximal) q.covers.push_back({i, t});
  }
  std::sort(q.covers.begin(), q.covers.end());
  compute_order_closure(q);
  return q;
}

// induced subposet {z : a <= z <= b} with inherited covers; keeps original ids
struct Interval {
  const FinitePoset* p;
  int bottom, top;
  std::vector<int> members;  // sorted original ids

  bool contains(int z) const {
    return std::binary_search(members.begin(), members.end(), z);
  }
};

inline Interval closed_interval(const FinitePoset& p, int a, int b) {
  if (!p.leq(a, b)) throw std::invalid_argument("interval endpoints: a !<= b");
  Interval iv{&p, a, b, {}};
  for (int z = 0; z < p.size(); ++z)
    if (p.leq(a, z) && p.leq(z, b)) iv.members.push_back(z);
  return iv;
}

// all maximal chains of [a,b], bottom to top, as id sequences
inline std::vector<std::vector<int>> maximal_chains(const Interval& iv) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur{iv.bottom};
  auto rec = [&](auto&& self) -> void {
    int z = cur.back();
    if (z == iv.top) {
      out.push_back(cur);
      return;
    }
    for (auto [lo, hi] : iv.p->covers)
      if (lo == z && iv.p->leq(hi, iv.top)) {
        cur.push_back(hi);
        self(self);
        cur.pop_back();
      }
  };
  rec(rec);
  return out;
}

// Mobius function of [a,b] by the standard recursion over the interval
inline long long mobius(const FinitePoset& p, int a, int b) {
  if (!p.leq(a, b)) throw std::invalid_argument("mobius: a !<= b");
  Interval iv = closed_interval(p, a, b);
  std::map<int, long long> mu;  // mu[z] = mobius(a, z)
  // members are reachability-sorted by processing in rank order
  std::vector<int> order = iv.members;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return p.rank[x] < p.rank[y]; });
  for (int z : order) {
    long long s = 0;
    for (int w : order)
      if (w != z && p.leq(w, z)) s += mu[w];
    mu[z] = (z == a) ? 1 : -s;
  }
  return mu[b];
}

}  // namespace wba
