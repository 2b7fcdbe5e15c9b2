#pragma once
#include <algorithm>
#include <cassert>
#include <map>
#include <vector>

#include "wba/check.hpp"
#include "wba/partition.hpp"
#include "wba/rational.hpp"

/*
 * Class functions on the symmetric group, stored as one value per cycle type
 * in the canonical partition order (partitions_of(n), lex-descending), and
 * the irreducible character table via the border-strip recursion on beta
 * sets.  Used to certify that computed characters are genuine: a class
 * function is a character iff all its irreducible multiplicities are
 * nonnegative integers.
 */

namespace wba {

struct ClassFunction {
  int n = 0;
  std::vector<Partition> types;  // partitions_of(n), fixed order
  std::vector<Rat> vals;

  explicit ClassFunction(int n_ = 0)
      : n(n_), types(partitions_of(n_)), vals(types.size(), Rat(0)) {}

  Rat& at(const Partition& type) {
    auto it = std::find(types.begin(), types.end(), type);
    assert(it != types.end());
    return vals[it - types.begin()];
  }
  const Rat& at(const Partition& type) const {
    return const_cast<ClassFunction*>(this)->at(type);
  }
};

inline Rat scalar_product(const ClassFunction& f, const ClassFunction& g) {
  assert(f.n == g.n);
  Rat s = 0;
  for (size_t i = 0; i < f.types.size(); ++i)
    s += to_rat(class_size(f.types[i])) * f.vals[i] * g.vals[i];
  return s / to_rat(factorial(f.n));
}

namespace detail {

// chi^lambda evaluated on rho[from..], border-strip recursion on beta sets
inline long long mn_value(std::vector<int> lambda, const Partition& rho,
                          size_t from,
                          std::map<std::pair<std::vector<int>, size_t>,
                                   long long>& memo) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (from == rho.size()) {
    assert(lambda.empty());
    return 1;
  }
  auto key = std::make_pair(lambda, from);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int r = rho[from];
  int l = (int)lambda.size();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);
  // beta is strictly decreasing
  long long total = 0;
  for (int i = 0; i < l; ++i) {
    int b = beta[i] - r;
    if (b < 0) continue;
    if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
    int height = 0;  // beta entries strictly between b and beta[i]
    for (int a : beta)
      if (b < a && a < beta[i]) ++height;
    std::vector<int> nb = beta;
    nb[i] = b;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> lam2(l);
    for (int j = 0; j < l; ++j) lam2[j] = nb[j] - (l - 1 - j);
    long long sub = mn_value(lam2, rho, from + 1, memo);
    total += (height % 2 ? -sub : sub);
  }
  memo[key] = total;
  return total;
}

}  // namespace detail

inline ClassFunction irreducible_character(const Partition& lambda) {
  int n = weight(lambda);
  ClassFunction chi(n);
  for (size_t i = 0; i < chi.types.size(); ++i) {
    // the memo key is (shape, position in rho), so it is only valid within
    // a single evaluation type; do not share it across classes
    std::map<std::pair<std::vector<int>, size_t>, long long> memo;
    chi.vals[i] = to_rat(detail::mn_value(lambda, chi.types[i], 0, memo));
  }
  return chi;
}

// multiplicities in the order of partitions_of(n)
inline std::vector<Rat> irreducible_multiplicities(const ClassFunction& f) {
  std::vector<Rat> mult;
  for (const Partition& lam : partitions_of(f.n))
    mult.push_back(scalar_product(f, irreducible_character(lam)));
  return mult;
}

inline bool is_genuine_character(const ClassFunction& f) {
  for (const Rat& m : irreducible_multiplicities(f))
    if (!is_nonneg_integer(m)) return false;
  return true;
}

}  // namespace wba
