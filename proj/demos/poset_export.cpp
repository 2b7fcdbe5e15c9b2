// Build B_3^{[2]} with its synthetic top, print the labeled Hasse diagram as
// DOT, and list the label word of every maximal chain so the unique strictly
// increasing one is easy to spot.
//
//   ./poset_export > b3.dot && dot -Tpng b3.dot -o b3.png

#include <iostream>

#include "wba/el_labeling.hpp"
#include "wba/json_io.hpp"
#include "wba/poset.hpp"

int main() {
  wba::FinitePoset p = wba::add_top(wba::build_weighted_boolean(3, 2));
  std::cout << wba::poset_to_dot(p, /*with_labels=*/true);

  wba::Interval iv = wba::closed_interval(p, 0, p.top_id());
  auto chains = wba::maximal_chains(iv);
  std::cerr << chains.size() << " maximal chains in the full interval:\n";
  for (const auto& ch : chains) {
    auto word = wba::label_word(p, ch);
    std::cerr << "  ";
    for (const auto& lab : word)
      std::cerr << lab.letter << "^" << lab.color << " ";
    std::cerr << (wba::is_increasing_word(word) ? "  <-- increasing" : "")
              << "\n";
  }
  return 0;
}
