#pragma once
#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "wba/chain_complex.hpp"
#include "wba/char_table.hpp"
#include "wba/colored_permutation.hpp"
#include "wba/combinatorics.hpp"
#include "wba/double_series.hpp"
#include "wba/el_labeling.hpp"
#include "wba/gessel.hpp"
#include "wba/hopf_trace.hpp"
#include "wba/module.hpp"
#include "wba/poset.hpp"
#include "wba/report.hpp"
#include "wba/specializations.hpp"
#include "wba/symfunc.hpp"
#include "wba/whitney.hpp"

/*
 * The theorem checks, each returning a CheckReport.  These back both the
 * command-line `verify` subcommand and the acceptance-style test binaries;
 * all comparisons are exact.
 */

namespace wba {

namespace detail {

inline void fail(CheckReport& rep, const std::string& witness) {
  rep.pass = false;
  if (rep.witnesses.size() < 8) rep.witnesses.push_back(witness);
}

// all contents of size 1..n_max using at most k colors (trailing zeros
// stripped by the representation; interior zeros appear for k > 1)
inline std::vector<WeakComposition> contents_up_to(int n_max, int k) {
  std::vector<WeakComposition> out;
  for (int n = 1; n <= n_max; ++n)
    for (const WeakComposition& mu : enumerate_weak_compositions(n, k))
      out.push_back(mu);
  return out;
}

}  // namespace detail

// --- EL-labeling: unique increasing chain, lexicographically first -------

inline CheckReport check_el(int n_max, int k_max) {
  CheckReport rep;
  rep.name = "el-shellability";
  rep.params["n_max"] = n_max;
  rep.params["k_max"] = k_max;
  rep.pass = true;
  Stopwatch sw;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= k_max; ++k) {
      FinitePoset p = add_top(build_weighted_boolean(n, k));
      ElReport r = verify_el_labeling(p);
      rep.params["intervals[" + std::to_string(n) + "," +
                 std::to_string(k) + "]"] = r.intervals_checked;
      if (!r.pass)
        for (const auto& v : r.violations)
          detail::fail(rep, "n=" + std::to_string(n) +
                                " k=" + std::to_string(k) + ": " + v);
    }
  rep.seconds = sw.seconds();
  return rep;
}

// --- dimension three-way agreement and Mobius consistency ----------------

struct DimRow {
  WeakComposition mu;
  long long ninc = 0;
  long long rank_nullity = 0;
  long long top_betti = 0;
  bool lower_betti_zero = true;
  long long mobius = 0;
};

inline DimRow dimension_row(const WeakComposition& mu) {
  DimRow row;
  row.mu = mu;
  int n = mu.size();
  row.ninc = count_ninc(mu);
  long long gens = (long long)enumerate_colored_permutations(mu).size();
  row.rank_nullity = gens - exterior_relation_rank(mu);

  int k = std::max(1, mu.length());
  FinitePoset p = build_weighted_boolean(std::max(n, 1), k);
  uint32_t full = n == 0 ? 0 : (((uint32_t)1 << n) - 1);
  int top = -1;
  for (int i = 0; i < (int)p.elements.size(); ++i)
    if (p.elements[i].base == full && p.elements[i].weight == mu) top = i;
  ensure(top >= 0, "interval top not found");
  Interval iv = closed_interval(p, 0, top);
  ChainComplexQ complex = order_complex(p, iv);
  std::vector<long long> betti = reduced_betti(complex);
  row.top_betti = betti.back();
  for (size_t i = 0; i + 1 < betti.size(); ++i)
    row.lower_betti_zero &= (betti[i] == 0);
  row.mobius = mobius(p, 0, top);
  return row;
}

inline CheckReport check_dims(int n_max, int color_sup,
                              std::vector<DimRow>* rows_out = nullptr) {
  CheckReport rep;
  rep.name = "dimension-three-way";
  rep.params["n_max"] = n_max;
  rep.params["colors"] = color_sup;
  rep.pass = true;
  Stopwatch sw;
  for (const WeakComposition& mu :
       detail::contents_up_to(n_max, color_sup)) {
    DimRow row = dimension_row(mu);
    if (rows_out) rows_out->push_back(row);
    if (row.ninc != row.rank_nullity)
      detail::fail(rep, "mu=" + mu.str() + ": ninc " +
                            std::to_string(row.ninc) + " != rank-nullity " +
                            std::to_string(row.rank_nullity));
    if (row.ninc != row.top_betti)
      detail::fail(rep, "mu=" + mu.str() + ": ninc " +
                            std::to_string(row.ninc) + " != top betti " +
                            std::to_string(row.top_betti));
    if (!row.lower_betti_zero)
      detail::fail(rep, "mu=" + mu.str() + ": nonzero lower betti");
  }
  rep.seconds = sw.seconds();
  return rep;
}

inline CheckReport check_mobius(int n_max, int color_sup) {
  CheckReport rep;
  rep.name = "mobius-consistency";
  rep.params["n_max"] = n_max;
  rep.params["colors"] = color_sup;
  rep.pass = true;
  Stopwatch sw;
  for (const WeakComposition& mu :
       detail::contents_up_to(n_max, color_sup)) {
    int n = mu.size();
    long long ninc = count_ninc(mu);
    int k = std::max(1, mu.length());
    FinitePoset p = build_weighted_boolean(n, k);
    uint32_t full = ((uint32_t)1 << n) - 1;
    int top = -1;
    for (int i = 0; i < (int)p.elements.size(); ++i)
      if (p.elements[i].base == full && p.elements[i].weight == mu) top = i;
    ensure(top >= 0, "interval top not found");
    long long mob = mobius(p, 0, top);
    long long expected = (n % 2 ? -ninc : ninc);
    if (mob != expected)
      detail::fail(rep, "mu=" + mu.str() + ": mobius " +
                            std::to_string(mob) + " != " +
                            std::to_string(expected));
  }
  rep.seconds = sw.seconds();
  return rep;
}

// --- characters: algebra route vs topology route -------------------------

inline CheckReport check_characters(int n_max) {
  CheckReport rep;
  rep.name = "character-equality";
  rep.params["n_max"] = n_max;
  rep.pass = true;
  Stopwatch sw;
  for (const WeakComposition& mu : detail::contents_up_to(n_max, n_max)) {
    int n = mu.size();
    std::vector<Partition> types = partitions_of(n);
    std::vector<std::vector<int>> taus;
    for (auto& t : types) taus.push_back(cycle_type_representative(t));
    std::vector<long long> alg = exterior_character_values(mu, taus);
    ClassFunction top = top_cohomology_character(n, mu);
    ClassFunction algf(n);
    for (size_t i = 0; i < alg.size(); ++i) algf.vals[i] = to_rat(alg[i]);
    for (size_t i = 0; i < types.size(); ++i)
      if (algf.vals[i] != top.vals[i])
        detail::fail(rep,
                     "mu=" + mu.str() + " class=" + partition_str(types[i]) +
                         ": algebra " + rat_str(algf.vals[i]) +
                         " != cohomology " + rat_str(top.vals[i]));
    if (!is_genuine_character(algf))
      detail::fail(rep, "mu=" + mu.str() + ": not a genuine character");
  }
  rep.seconds = sw.seconds();
  return rep;
}

inline CheckReport check_symmetric_trivial(int n_max) {
  CheckReport rep;
  rep.name = "symmetric-module-trivial";
  rep.params["n_max"] = n_max;
  rep.pass = true;
  Stopwatch sw;
  for (const WeakComposition& mu : detail::contents_up_to(n_max, n_max)) {
    PresentedModule M = build_symmetric_module(mu);
    if (M.dim() != 1) {
      detail::fail(rep, "mu=" + mu.str() + ": dim " +
                            std::to_string(M.dim()) + " != 1");
      continue;
    }
    for (const Partition& t : partitions_of(mu.size())) {
      Rat tr = module_trace(M, cycle_type_representative(t));
      if (tr != 1)
        detail::fail(rep, "mu=" + mu.str() + " class=" + partition_str(t) +
                              ": trace " + rat_str(tr) + " != 1");
    }
  }
  rep.seconds = sw.seconds();
  return rep;
}

// --- the three-way series identity ---------------------------------------

inline CheckReport check_series_identity(int N) {
  CheckReport rep;
  rep.name = "series-three-way";
  rep.params["degree"] = N;
  rep.pass = true;
  Stopwatch sw;
  DoubleSeries F = alternating_h_series(N);
  DoubleSeries inv = invert_double_series(F, N);
  DoubleSeries lhs = assemble_lhs_series(N, N);
  DoubleSeries rhs = explicit_rhs_series(N);
  if (!(lhs == inv))
    detail::fail(rep, "assembled characters != inverted series");
  if (!(inv == rhs)) detail::fail(rep, "inverted series != explicit form");

  // re-multiplication: F * inv = 1 within the window
  DoubleSeries prod = ds_multiply(F, inv, N, N);
  DoubleSeries one;
  one.add({}, {}, 1);
  if (!(prod == one)) detail::fail(rep, "F * inverse != 1");

  // Schur coefficients of the y side, per x-partition, all in Z>=0
  std::map<Partition, SymFunc> yparts;
  for (auto& [key, c] : inv.coef) yparts[key.first][key.second] = c;
  for (auto& [lam, f] : yparts)
    for (auto& [nu, c] : schur_expand(f))
      if (!is_nonneg_integer(c))
        detail::fail(rep, "x=" + partition_str(lam) + " s_" +
                              partition_str(nu) + " coefficient " +
                              rat_str(c));
  rep.seconds = sw.seconds();
  return rep;
}

// --- dimension series and its E1 inverse ---------------------------------

inline SymFunc dimension_series_component(int n) {
  SymFunc out;
  for (const Partition& lam : partitions_of(n)) {
    WeakComposition mu(lam);
    out[lam] = to_rat(count_ninc(mu));
  }
  return out;
}

inline SymFunc runlength_e_sum(int n) {
  std::map<Partition, long long> dist;
  for (const auto& sigma : all_permutations(n)) ++dist[type_partition(sigma)];
  SymFunc out;
  for (auto& [lam, cnt] : dist)
    sf_add_scaled(out, basis_product('e', lam, n), to_rat(cnt));
  return out;
}

inline CheckReport check_dimension_series(int n_max) {
  CheckReport rep;
  rep.name = "dimension-series";
  rep.params["n_max"] = n_max;
  rep.pass = true;
  Stopwatch sw;
  std::vector<SymFunc> dims(n_max + 1);
  dims[0] = sf_one();
  for (int n = 1; n <= n_max; ++n) {
    dims[n] = dimension_series_component(n);
    if (dims[n] != runlength_e_sum(n))
      detail::fail(rep, "n=" + std::to_string(n) +
                            ": dim series != run-length e-sum");
  }
  // (sum dims_n y^n/n!) * (sum (-1)^n h_n y^n/n!) = 1, coefficientwise
  for (int n = 0; n <= n_max; ++n) {
    SymFunc acc;
    for (int j = 0; j <= n; ++j) {
      SymFunc term = multiply(dims[j], h_k(n - j), n_max);
      Rat c = Rat((n - j) % 2 ? -1 : 1) /
              (to_rat(factorial(j)) * to_rat(factorial(n - j)));
      sf_add_scaled(acc, term, c);
    }
    if (n == 0) sf_add_scaled(acc, sf_one(), Rat(-1));
    if (!acc.empty())
      detail::fail(rep,
                   "degree " + std::to_string(n) + ": E1 product residue");
  }
  rep.seconds = sw.seconds();
  return rep;
}

// --- specializations: E2, Riordan, Eulerian ------------------------------

inline CheckReport check_specializations(int n_h, int n_eulerian) {
  CheckReport rep;
  rep.name = "specializations";
  rep.params["n_h"] = n_h;
  rep.params["n_eulerian"] = n_eulerian;
  rep.pass = true;
  Stopwatch sw;
  for (int n = 1; n <= n_h; ++n) {
    PolynomialT got = specialize_E2(h_k(n));
    PolynomialT want = poly_pow({Rat(-1), Rat(1)}, n - 1);  // (t-1)^(n-1)
    want.insert(want.begin(), Rat(0));                      // times t
    poly_trim(want);
    if (got != want)
      detail::fail(rep, "E2(h_" + std::to_string(n) + ") mismatch");
  }
  auto riordan = riordan_expansion(n_h);
  for (int n = 1; n <= n_h; ++n) {
    std::vector<long long> eul = eulerian_polynomial(n);
    PolynomialT want(eul.size());
    for (size_t i = 0; i < eul.size(); ++i) want[i] = to_rat(eul[i]);
    poly_trim(want);
    PolynomialT got = riordan[n];
    poly_trim(got);
    if (got != want)
      detail::fail(rep, "riordan n=" + std::to_string(n) +
                            " != eulerian polynomial");
  }
  for (int n = 1; n <= n_eulerian; ++n) {
    PolynomialT got = specialize_E2(runlength_e_sum(n));
    std::vector<long long> eul = eulerian_polynomial(n);
    PolynomialT want(eul.size());
    for (size_t i = 0; i < eul.size(); ++i) want[i] = to_rat(eul[i]);
    poly_trim(want);
    if (got != want)
      detail::fail(rep, "E2 of run-length sum n=" + std::to_string(n) +
                            " != eulerian polynomial");
  }
  rep.seconds = sw.seconds();
  return rep;
}

// --- Foulkes sum and the regular representation --------------------------

inline CheckReport check_foulkes(int n_max) {
  CheckReport rep;
  rep.name = "foulkes-regular-rep";
  rep.params["n_max"] = n_max;
  rep.pass = true;
  Stopwatch sw;
  SymFunc geom = sf_one();  // degree-n slice of (1 - h_1)^{-1}, iterated
  for (int n = 1; n <= n_max; ++n) {
    geom = multiply(geom, h_k(1), n_max);
    SymFunc hooks;
    for (const Composition& alpha : compositions_of(n))
      sf_add_scaled(hooks, hook_schur(alpha), Rat(1));
    SymFunc power = basis_product('h', Partition(n, 1), n_max);  // h_1^n
    if (hooks != power)
      detail::fail(rep, "n=" + std::to_string(n) +
                            ": sum of hook Schur functions != h1^n");
    if (geom != power)
      detail::fail(rep, "n=" + std::to_string(n) +
                            ": geometric-series slice != h1^n");
  }
  rep.seconds = sw.seconds();
  return rep;
}

// --- Gessel word inversion ----------------------------------------------

inline CheckReport check_gessel(int k, int L_max) {
  CheckReport rep;
  rep.name = "gessel-inversion";
  rep.params["alphabet"] = std::to_string(k) + "x" + std::to_string(k);
  rep.params["length"] = L_max;
  Stopwatch sw;
  GesselReport g = gessel_check(product_order_alphabet(k), L_max);
  rep.pass = true;
  rep.params["words"] = g.words_checked;
  for (auto& w : g.witnesses) detail::fail(rep, w);
  rep.pass = rep.pass && g.pass;
  rep.seconds = sw.seconds();
  return rep;
}

// --- Whitney recursion ---------------------------------------------------

inline CheckReport check_whitney(int n_max, int color_sup) {
  CheckReport rep;
  rep.name = "whitney-recursion";
  rep.params["n_max"] = n_max;
  rep.params["colors"] = color_sup;
  rep.pass = true;
  Stopwatch sw;
  WhitneyReport r0 = whitney_recursion_check(WeakComposition{});
  if (!r0.pass) detail::fail(rep, "mu=(): residual nonzero");
  for (const WeakComposition& mu :
       detail::contents_up_to(n_max, color_sup)) {
    WhitneyReport r = whitney_recursion_check(mu);
    if (!r.pass) detail::fail(rep, "mu=" + mu.str() + ": residual nonzero");
  }
  rep.seconds = sw.seconds();
  return rep;
}

// --- h in terms of e -----------------------------------------------------

inline CheckReport check_h_to_e(int n_max) {
  CheckReport rep;
  rep.name = "h-to-e";
  rep.params["n_max"] = n_max;
  rep.pass = true;
  Stopwatch sw;
  for (int n = 1; n <= n_max; ++n) {
    // h_n = (-1)^n sum over compositions nu of (-1)^len(nu) e_nu
    SymFunc sum;
    for (const Composition& nu : compositions_of(n)) {
      Partition lam(nu);
      std::sort(lam.rbegin(), lam.rend());
      sf_add_scaled(sum, basis_product('e', lam, n),
                    Rat(nu.size() % 2 ? -1 : 1));
    }
    SymFunc scaled;
    sf_add_scaled(scaled, sum, Rat(n % 2 ? -1 : 1));
    if (scaled != h_k(n))
      detail::fail(rep, "n=" + std::to_string(n) + ": expansion mismatch");
  }
  rep.seconds = sw.seconds();
  return rep;
}

}  // namespace wba
