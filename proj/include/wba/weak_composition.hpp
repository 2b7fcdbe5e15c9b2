#pragma once
#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "wba/partition.hpp"

/*
 * A weak composition is conceptually an infinite vector of nonnegative
 * integers with finite support, indexed by colors 1,2,3,...  We store the
 * canonical finite prefix (no trailing zeros); equality and ordering act on
 * that canonical form, so (1,2) == (1,2,0,0).
 */

namespace wba {

struct WeakComposition {
  std::vector<int> parts;  // canonical: no trailing zeros, all >= 0

  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> v) : parts(std::move(v)) {
    for (int x : parts) { (void)x; assert(x >= 0); }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
  }

  int size() const { return weight(parts); }          // |mu|
  int length() const { return (int)parts.size(); }    // index of last nonzero
  int part(int color) const {                         // 1-based color index
    assert(color >= 1);
    return color <= length() ? parts[color - 1] : 0;
  }
  std::vector<int> support() const {
    std::vector<int> s;
    for (int j = 1; j <= length(); ++j)
      if (part(j) > 0) s.push_back(j);
    return s;
  }
  Partition sorted() const { return sort_to_partition(parts); }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }

  WeakComposition plus(int color) const {  // mu + e_color
    std::vector<int> v = parts;
    if ((int)v.size() < color) v.resize(color, 0);
    v[color - 1] += 1;
    return WeakComposition(std::move(v));
  }
  WeakComposition minus(int color) const {  // mu - e_color; requires part>0
    assert(part(color) > 0);
    std::vector<int> v = parts;
    v[color - 1] -= 1;
    return WeakComposition(std::move(v));
  }

  bool operator==(const WeakComposition& o) const { return parts == o.parts; }
  bool operator!=(const WeakComposition& o) const { return parts != o.parts; }
  bool operator<(const WeakComposition& o) const { return parts < o.parts; }
};

// componentwise eta <= mu
inline bool leq_componentwise(const WeakComposition& eta,
                              const WeakComposition& mu) {
  for (int j = 1; j <= eta.length(); ++j)
    if (eta.part(j) > mu.part(j)) return false;
  return true;
}

inline WeakComposition subtract(const WeakComposition& mu,
                                const WeakComposition& eta) {
  assert(leq_componentwise(eta, mu));
  std::vector<int> v(std::max(mu.length(), eta.length()), 0);
  for (int j = 1; j <= (int)v.size(); ++j) v[j - 1] = mu.part(j) - eta.part(j);
  return WeakComposition(std::move(v));
}

// all weak compositions of n with support in [k], ordered lexicographically
// decreasing on the length-k part vector: (n,0,..), ..., (0,..,0,n)
inline std::vector<WeakComposition> enumerate_weak_compositions(int n, int k) {
  assert(n >= 0 && k >= 1);
  std::vector<WeakComposition> out;
  std::vector<int> cur(k, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      cur[pos] = left;
      out.push_back(WeakComposition(cur));
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

// all eta with eta <= mu componentwise (used by the Whitney recursion);
// ordered lexicographically decreasing like enumerate_weak_compositions
inline std::vector<WeakComposition> enumerate_subcompositions(
    const WeakComposition& mu) {
  std::vector<WeakComposition> out;
  int k = mu.length();
  std::vector<int> cur(k, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      out.push_back(WeakComposition(cur));
      return;
    }
    for (int v = mu.part(pos + 1); v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace wba
