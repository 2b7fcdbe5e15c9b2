#pragma once
#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <vector>

#include "wba/char_table.hpp"
#include "wba/check.hpp"
#include "wba/partition.hpp"
#include "wba/rational.hpp"
#include "wba/skew_hook.hpp"

/*
 * Symmetric functions in the monomial basis, truncated at a degree window.
 * A SymFunc maps partitions to exact rational coefficients; all products
 * take an explicit window and drop terms of higher degree.
 *
 * The product rule in the m basis is monomial bookkeeping: the coefficient
 * of m_rho in m_lambda * m_nu is the number of pairs of distinct
 * rearrangements (with zeros) u of lambda and v of nu, both padded to
 * len(lambda)+len(nu), whose componentwise sum is exactly rho padded --
 * each pair of monomials contributing to x^rho is counted once.
 */

namespace wba {

using SymFunc = std::map<Partition, Rat>;

inline void sf_add_scaled(SymFunc& a, const SymFunc& b, const Rat& c) {
  for (auto& [lam, v] : b) {
    Rat& slot = a[lam];
    slot += c * v;
    if (slot == 0) a.erase(lam);
  }
}

inline Rat sf_coeff(const SymFunc& f, const Partition& lam) {
  auto it = f.find(lam);
  return it == f.end() ? Rat(0) : it->second;
}

namespace detail {

inline std::vector<std::vector<int>> distinct_rearrangements(
    std::vector<int> padded) {
  std::sort(padded.begin(), padded.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(padded);
  } while (std::next_permutation(padded.begin(), padded.end()));
  return out;
}

inline SymFunc m_times_m(const Partition& lam, const Partition& nu) {
  size_t L = lam.size() + nu.size();
  std::vector<int> pl(lam), pn(nu);
  pl.resize(L, 0);
  pn.resize(L, 0);
  auto us = distinct_rearrangements(pl);
  auto vs = distinct_rearrangements(pn);
  SymFunc out;
  std::vector<int> w(L);
  for (const auto& u : us)
    for (const auto& v : vs) {
      bool sorted = true;
      for (size_t i = 0; i < L; ++i) {
        w[i] = u[i] + v[i];
        if (i && w[i - 1] < w[i]) {
          sorted = false;
          break;
        }
      }
      if (!sorted) continue;
      Partition rho(w.begin(), w.end());
      while (!rho.empty() && rho.back() == 0) rho.pop_back();
      out[rho] += 1;
    }
  return out;
}

inline const SymFunc& m_times_m_cached(const Partition& lam,
                                       const Partition& nu) {
  static std::map<std::pair<Partition, Partition>, SymFunc> cache;
  auto key = lam <= nu ? std::make_pair(lam, nu) : std::make_pair(nu, lam);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, m_times_m(key.first, key.second)).first;
  return it->second;
}

}  // namespace detail

inline SymFunc multiply(const SymFunc& a, const SymFunc& b, int window) {
  SymFunc out;
  for (auto& [lam, ca] : a) {
    int wa = weight(lam);
    for (auto& [nu, cb] : b) {
      if (wa + weight(nu) > window) continue;
      sf_add_scaled(out, detail::m_times_m_cached(lam, nu), ca * cb);
    }
  }
  return out;
}

inline SymFunc sf_one() { return SymFunc{{{}, Rat(1)}}; }

inline SymFunc e_k(int k) {
  if (k == 0) return sf_one();
  return SymFunc{{Partition(k, 1), Rat(1)}};
}

inline SymFunc h_k(int k) {
  SymFunc out;
  for (const Partition& lam : partitions_of(k)) out[lam] = 1;
  return out;
}

inline SymFunc p_k(int k) {
  if (k == 0) return sf_one();
  return SymFunc{{Partition{k}, Rat(1)}};
}

// number of semistandard tableaux of shape lam and content mu
inline long long kostka(const Partition& lam, const Partition& mu) {
  if (weight(lam) != weight(mu)) return 0;
  int rows = (int)lam.size();
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(lam[r], 0);
  std::vector<int> avail(mu);
  long long count = 0;
  // row-major: each cell >= left, > above, consuming the content
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == rows) {
      ++count;
      return;
    }
    if (c == lam[r]) {
      self(self, r + 1, 0);
      return;
    }
    int lo = c > 0 ? fill[r][c - 1] : 1;
    if (r > 0 && c < lam[r - 1]) lo = std::max(lo, fill[r - 1][c] + 1);
    for (int v = lo; v <= (int)avail.size(); ++v) {
      if (avail[v - 1] == 0) continue;
      --avail[v - 1];
      fill[r][c] = v;
      self(self, r, c + 1);
      ++avail[v - 1];
    }
  };
  rec(rec, 0, 0);
  return count;
}

inline SymFunc s_lambda(const Partition& lam) {
  SymFunc out;
  for (const Partition& mu : partitions_of(weight(lam))) {
    long long k = kostka(lam, mu);
    if (k) out[mu] = to_rat(k);
  }
  return out;
}

// e_lam / h_lam / p_lam as products of the one-row generators
inline SymFunc basis_product(char basis, const Partition& lam, int window) {
  SymFunc out = sf_one();
  for (int part : lam) {
    SymFunc g;
    switch (basis) {
      case 'e': g = e_k(part); break;
      case 'h': g = h_k(part); break;
      case 'p': g = p_k(part); break;
      case 's': g = s_lambda(Partition{part}); break;
      default: ensure(false, "unknown basis"); return out;
    }
    out = multiply(out, g, window);
  }
  return out;
}

inline SymFunc basis_to_monomial(char basis, const Partition& lam) {
  if (basis == 's') return s_lambda(lam);
  return basis_product(basis, lam, weight(lam));
}

/*
 * Schur expansion by dominance triangularity: s_rho = m_rho + lower terms,
 * so repeatedly stripping the lex-largest monomial of each degree
 * terminates.  Exactness makes the result independent of tie handling.
 */
inline std::map<Partition, Rat> schur_expand(SymFunc f) {
  std::map<Partition, Rat> out;
  while (!f.empty()) {
    auto pick = f.begin();
    for (auto it = f.begin(); it != f.end(); ++it) {
      if (weight(it->first) > weight(pick->first) ||
          (weight(it->first) == weight(pick->first) &&
           it->first > pick->first))
        pick = it;
    }
    Partition rho = pick->first;
    Rat c = pick->second;
    out[rho] = c;
    sf_add_scaled(f, s_lambda(rho), -c);
  }
  return out;
}

// expansion in the e/h/p basis via one dense solve per degree
inline std::map<Partition, Rat> expand_in_basis(const SymFunc& f,
                                                char basis) {
  std::map<Partition, Rat> out;
  std::set<int> degrees;
  for (auto& [lam, c] : f) degrees.insert(weight(lam));
  for (int d : degrees) {
    std::vector<Partition> lams = partitions_of(d);
    int k = (int)lams.size();
    // column j = m-expansion of basis_lam[j]; solve A x = rhs
    std::vector<std::vector<Rat>> A(k, std::vector<Rat>(k + 1, Rat(0)));
    for (int j = 0; j < k; ++j) {
      SymFunc g = basis_product(basis, lams[j], d);
      for (int i = 0; i < k; ++i) A[i][j] = sf_coeff(g, lams[i]);
    }
    for (int i = 0; i < k; ++i) {
      auto it = f.find(lams[i]);
      A[i][k] = (it == f.end()) ? Rat(0) : it->second;
    }
    for (int col = 0, row = 0; col < k && row < k; ++col) {
      int piv = -1;
      for (int r = row; r < k; ++r)
        if (A[r][col] != 0) {
          piv = r;
          break;
        }
      ensure(piv >= 0, "basis change matrix is singular");
      std::swap(A[piv], A[row]);
      for (int r = 0; r < k; ++r) {
        if (r == row || A[r][col] == 0) continue;
        Rat f2 = A[r][col] / A[row][col];
        for (int cc = col; cc <= k; ++cc) A[r][cc] -= f2 * A[row][cc];
      }
      ++row;
    }
    for (int i = 0; i < k; ++i) {
      int lead = -1;
      for (int j = 0; j < k; ++j)
        if (A[i][j] != 0) {
          lead = j;
          break;
        }
      if (lead < 0) {
        ensure(A[i][k] == 0, "inconsistent basis expansion");
        continue;
      }
      Rat v = A[i][k] / A[i][lead];
      if (v != 0) out[lams[lead]] = v;
    }
  }
  return out;
}

// Frobenius characteristic: (1/n!) sum over classes |K| chi(K) p_K
inline SymFunc frobenius(const ClassFunction& chi) {
  SymFunc out;
  for (size_t i = 0; i < chi.types.size(); ++i) {
    if (chi.vals[i] == 0) continue;
    Rat c = chi.vals[i] * to_rat(class_size(chi.types[i])) /
            to_rat(factorial(chi.n));
    sf_add_scaled(out, basis_product('p', chi.types[i], chi.n), c);
  }
  return out;
}

// skew Schur function of the skew hook of alpha, via descent-class SYT
inline std::map<Partition, long long> hook_schur_coeffs(
    const Composition& alpha) {
  std::map<Partition, long long> out;
  if (alpha.empty()) {
    out[{}] = 1;
    return out;
  }
  SkewHook hk = skew_hook(alpha);
  for (const Partition& lam : partitions_of(weight(alpha))) {
    long long c = count_syt_with_descents(lam, hk.descent_set);
    if (c) out[lam] = c;
  }
  return out;
}

inline SymFunc hook_schur(const Composition& alpha) {
  SymFunc out;
  for (auto& [lam, c] : hook_schur_coeffs(alpha))
    sf_add_scaled(out, s_lambda(lam), to_rat(c));
  return out;
}

}  // namespace wba
