#pragma once
#include <map>
#include <utility>
#include <vector>

#include "wba/check.hpp"
#include "wba/colored_permutation.hpp"
#include "wba/module.hpp"
#include "wba/partition.hpp"
#include "wba/rational.hpp"
#include "wba/symfunc.hpp"
#include "wba/weak_composition.hpp"

/*
 * Series in two independent sets of variables, stored in the m (x) tensor
 * m (y) basis:  coef[(lambda, nu)] * m_lambda(x) m_nu(y).  All operations
 * truncate at a per-variable-set degree window.  The series of interest are
 * diagonal (x-degree = y-degree), but nothing here assumes it.
 */

namespace wba {

using BiKey = std::pair<Partition, Partition>;

struct DoubleSeries {
  std::map<BiKey, Rat> coef;

  Rat at(const Partition& lam, const Partition& nu) const {
    auto it = coef.find({lam, nu});
    return it == coef.end() ? Rat(0) : it->second;
  }
  void add(const Partition& lam, const Partition& nu, const Rat& c) {
    Rat& slot = coef[{lam, nu}];
    slot += c;
    if (slot == 0) coef.erase({lam, nu});
  }
  bool operator==(const DoubleSeries& o) const { return coef == o.coef; }
};

// tensor product of one-variable-set pieces
inline DoubleSeries tensor(const SymFunc& fx, const SymFunc& fy) {
  DoubleSeries out;
  for (auto& [lam, a] : fx)
    for (auto& [nu, b] : fy) out.add(lam, nu, a * b);
  return out;
}

inline DoubleSeries ds_multiply(const DoubleSeries& a, const DoubleSeries& b,
                                int wx, int wy) {
  DoubleSeries out;
  for (auto& [ka, ca] : a.coef)
    for (auto& [kb, cb] : b.coef) {
      if (weight(ka.first) + weight(kb.first) > wx) continue;
      if (weight(ka.second) + weight(kb.second) > wy) continue;
      const SymFunc& px = detail::m_times_m_cached(ka.first, kb.first);
      const SymFunc& py = detail::m_times_m_cached(ka.second, kb.second);
      Rat c = ca * cb;
      for (auto& [lam, u] : px)
        for (auto& [nu, v] : py) out.add(lam, nu, c * u * v);
    }
  return out;
}

// x-degree-n slice
inline DoubleSeries ds_component(const DoubleSeries& a, int n) {
  DoubleSeries out;
  for (auto& [k, c] : a.coef)
    if (weight(k.first) == n) out.add(k.first, k.second, c);
  return out;
}

// sum over n <= N of (-1)^n h_n(x) h_n(y)
inline DoubleSeries alternating_h_series(int N) {
  DoubleSeries out;
  for (int n = 0; n <= N; ++n) {
    DoubleSeries t = tensor(h_k(n), h_k(n));
    for (auto& [k, c] : t.coef) out.add(k.first, k.second, n % 2 ? -c : c);
  }
  return out;
}

/*
 * Multiplicative inverse through x-degree N, grading by x-degree:
 * G_0 = 1/F_0 and G_n = -(1/F_0) sum_{j=1..n} F_j G_{n-j}.  The constant
 * term must be 1 (it is, for the alternating h series).
 */
inline DoubleSeries invert_double_series(const DoubleSeries& f, int N) {
  ensure(f.at({}, {}) == 1, "constant term of the series must be 1");
  DoubleSeries g;
  g.add({}, {}, 1);
  for (int n = 1; n <= N; ++n) {
    DoubleSeries conv;
    for (int j = 1; j <= n; ++j) {
      DoubleSeries prod =
          ds_multiply(ds_component(f, j), ds_component(g, n - j), N, N);
      for (auto& [k, c] : prod.coef) conv.add(k.first, k.second, c);
    }
    for (auto& [k, c] : conv.coef) g.add(k.first, k.second, -c);
  }
  return g;
}

/*
 * Left side assembled from module characters:  sum over n <= N and over
 * contents mu of x^mu ch L(mu).  Collecting x-monomials into m_lambda(x)
 * requires ch L(mu) to depend only on the rearrangement class of mu, so
 * that symmetry is verified exhaustively before collection.
 */
inline DoubleSeries assemble_lhs_series(int N, int k) {
  ensure(k >= N, "color bound must cover the x-degree window");
  DoubleSeries out;
  out.add({}, {}, 1);  // n = 0 term
  for (int n = 1; n <= N; ++n) {
    std::vector<Partition> types = partitions_of(n);
    std::vector<std::vector<int>> taus;
    for (auto& t : types) taus.push_back(cycle_type_representative(t));
    std::map<Partition, std::vector<long long>> by_shape;
    for (const WeakComposition& mu : enumerate_weak_compositions(n, k)) {
      std::vector<long long> vals = exterior_character_values(mu, taus);
      Partition shape = mu.sorted();
      auto it = by_shape.find(shape);
      if (it == by_shape.end())
        by_shape.emplace(shape, vals);
      else
        ensure(it->second == vals,
               "character not constant on rearrangement class of " +
                   mu.str());
    }
    for (auto& [shape, vals] : by_shape) {
      ClassFunction chi(n);
      for (size_t i = 0; i < vals.size(); ++i) chi.vals[i] = to_rat(vals[i]);
      SymFunc ch = frobenius(chi);
      for (auto& [nu, c] : ch) out.add(shape, nu, c);
    }
  }
  return out;
}

// right side: sum over compositions alpha of e_{sort(alpha)}(x) s_{H(alpha)}(y)
inline DoubleSeries explicit_rhs_series(int N) {
  DoubleSeries out;
  out.add({}, {}, 1);
  for (int n = 1; n <= N; ++n)
    for (const Composition& alpha : compositions_of(n)) {
      Partition shape(alpha);
      std::sort(shape.rbegin(), shape.rend());
      DoubleSeries t =
          tensor(basis_product('e', shape, n), hook_schur(alpha));
      for (auto& [key, c] : t.coef) out.add(key.first, key.second, c);
    }
  return out;
}

}  // namespace wba
