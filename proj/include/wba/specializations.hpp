#pragma once
#include <vector>

#include "wba/check.hpp"
#include "wba/rational.hpp"
#include "wba/symfunc.hpp"

/*
 * The two specializations out of the symmetric-function ring:
 *   E1: p_i -> y delta_{i,1}, so a degree-n character image becomes
 *       (dim/n!) y^n -- returned as the list of y^n coefficients;
 *   E2: e_i -> t for every i >= 1, so e_lambda -> t^len(lambda),
 *       landing in Q[t].
 * Plus the Riordan closed form (1-t)/(1 - t e^{(1-t)y}) expanded through
 * ordered set partitions: n! [y^n] = sum_m t^m (1-t)^{n-m} m! S(n,m).
 */

namespace wba {

using PolynomialT = std::vector<Rat>;  // coefficient of t^i at index i

inline void poly_trim(PolynomialT& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline PolynomialT poly_mul(const PolynomialT& a, const PolynomialT& b) {
  if (a.empty() || b.empty()) return {};
  PolynomialT out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  poly_trim(out);
  return out;
}

inline void poly_add_scaled(PolynomialT& a, const PolynomialT& b,
                            const Rat& c) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += c * b[i];
  poly_trim(a);
}

inline PolynomialT poly_pow(const PolynomialT& base, int e) {
  PolynomialT out{Rat(1)};
  for (int i = 0; i < e; ++i) out = poly_mul(out, base);
  return out;
}

// list c with c[n] = coefficient of y^n in the image of f under E1
inline std::vector<Rat> specialize_E1(const SymFunc& f) {
  int maxdeg = 0;
  for (auto& [lam, c] : f) maxdeg = std::max(maxdeg, weight(lam));
  std::vector<Rat> out(maxdeg + 1, Rat(0));
  std::map<Partition, Rat> pexp = expand_in_basis(f, 'p');
  for (auto& [lam, c] : pexp) {
    // p_lambda survives only when every part is 1
    bool allones = true;
    for (int part : lam) allones &= (part == 1);
    if (allones) out[weight(lam)] += c;
  }
  return out;
}

inline PolynomialT specialize_E2(const SymFunc& f) {
  PolynomialT out;
  std::map<Partition, Rat> eexp = expand_in_basis(f, 'e');
  for (auto& [lam, c] : eexp) {
    size_t len = lam.size();
    if (out.size() < len + 1) out.resize(len + 1, Rat(0));
    out[len] += c;
  }
  poly_trim(out);
  return out;
}

inline std::vector<std::vector<long long>> stirling2_table(int n_max) {
  std::vector<std::vector<long long>> S(n_max + 1,
                                        std::vector<long long>(n_max + 1, 0));
  S[0][0] = 1;
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= n; ++m)
      S[n][m] = S[n - 1][m - 1] + (long long)m * S[n - 1][m];
  return S;
}

// entry n: n! [y^n] (1-t)/(1 - t e^{(1-t)y}); entry 0 is the constant 1
inline std::vector<PolynomialT> riordan_expansion(int n_max) {
  auto S = stirling2_table(n_max);
  std::vector<PolynomialT> out;
  out.push_back({Rat(1)});
  PolynomialT one_minus_t{Rat(1), Rat(-1)};
  for (int n = 1; n <= n_max; ++n) {
    PolynomialT acc;
    long long mfact = 1;
    for (int m = 1; m <= n; ++m) {
      mfact *= m;
      if (S[n][m] == 0) continue;
      PolynomialT term = poly_pow(one_minus_t, n - m);
      // shift by t^m and scale by m! S(n,m)
      PolynomialT shifted(term.size() + m, Rat(0));
      for (size_t i = 0; i < term.size(); ++i)
        shifted[i + m] = term[i] * to_rat(mfact * S[n][m]);
      poly_add_scaled(acc, shifted, Rat(1));
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace wba
