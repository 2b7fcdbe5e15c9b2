// Small tour of the algebra side: build the module for mu = (1,1), show the
// straightening of a generator against the defining relations, and print the
// dimension table for all contents of size <= 3 on two colors.

#include <iostream>

#include "wba/module.hpp"
#include "wba/verify.hpp"

int main() {
  using namespace wba;

  WeakComposition mu({1, 1});
  PresentedModule M = build_exterior_module(mu);
  std::cout << "mu = " << mu.str() << ": " << M.gens.size()
            << " generators, dim " << M.dim() << ", basis:\n";
  for (int id : M.basis) std::cout << "  " << M.gens[id].str() << "\n";

  // Straighten the generator 1^1 2^2 (an ascent at position 1: the letter
  // increases and the color weakly increases) and print the resulting normal
  // form; every coefficient lands in {-1, 0, 1}.
  ColoredPermutation s{{{1, 1}, {2, 2}}};
  std::cout << "straighten " << s.str() << ":\n";
  for (const auto& [id, c] : straighten(M, s))
    std::cout << "  " << rat_str(c) << " * " << M.gens[id].str() << "\n";

  std::cout << "\nmu, ninc, rank-nullity, top-betti\n";
  for (const auto& nu : detail::contents_up_to(3, 2)) {
    DimRow row = dimension_row(nu);
    std::cout << nu.str() << ", " << row.ninc << ", " << row.rank_nullity
              << ", " << row.top_betti << "\n";
  }
  return 0;
}
