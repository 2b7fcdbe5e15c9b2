#pragma once
#include <vector>

#include "wba/hopf_trace.hpp"
#include "wba/symfunc.hpp"
#include "wba/weak_composition.hpp"

/*
 * The alternating Whitney-style recursion for the interval characters:
 * writing C(nu) for the Frobenius characteristic of the top cohomology of
 * (0-hat, [|nu|]^nu)  (with C of the empty content = 1 and C of a
 * one-letter content = h_1),
 *
 *   sum over eta <= mu of  (-1)^{|eta|} h_{|eta|}(y) * C(mu - eta)
 *
 * collapses to the Kronecker delta [mu empty].  The eta = mu term is
 * (+/-)h_n, the image of the trivial character; eta with |eta| = n-1
 * contributes h_{n-1} h_1.
 */

namespace wba {

struct WhitneyReport {
  bool pass = true;
  SymFunc residual;  // LHS minus the expected delta
};

inline SymFunc interval_top_characteristic(const WeakComposition& nu) {
  return frobenius(top_cohomology_character(nu.size(), nu));
}

inline WhitneyReport whitney_recursion_check(const WeakComposition& mu) {
  int n = mu.size();
  SymFunc lhs;
  for (const WeakComposition& eta : enumerate_subcompositions(mu)) {
    WeakComposition rest = subtract(mu, eta);
    SymFunc term = multiply(h_k(eta.size()),
                            interval_top_characteristic(rest), n);
    sf_add_scaled(lhs, term, eta.size() % 2 ? Rat(-1) : Rat(1));
  }
  WhitneyReport rep;
  if (n == 0) sf_add_scaled(lhs, sf_one(), Rat(-1));
  rep.residual = std::move(lhs);
  rep.pass = rep.residual.empty();
  return rep;
}

}  // namespace wba
