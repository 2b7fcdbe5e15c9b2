// The weighted subset poset, its synthetic top, and the edge labeling.

#include <catch2/catch_amalgamated.hpp>

#include "wba/colored_permutation.hpp"
#include "wba/el_labeling.hpp"
#include "wba/poset.hpp"

using namespace wba;

TEST_CASE("element counts of small weighted boolean posets") {
  CHECK(build_weighted_boolean(3, 2).size() == 20);
  CHECK(build_weighted_boolean(4, 2).size() == 48);
  CHECK(build_weighted_boolean(2, 3).size() == 13);
  CHECK(build_weighted_boolean(1, 1).size() == 2);
  CHECK_THROWS_AS(build_weighted_boolean(2, 0), std::invalid_argument);
}

TEST_CASE("rank is the subset size and ids are a linear extension") {
  FinitePoset p = build_weighted_boolean(3, 2);
  for (int i = 0; i < p.size(); ++i)
    CHECK(p.rank[i] == __builtin_popcount(p.elements[i].base));
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (a != b && p.leq(a, b)) CHECK(a < b);
}

TEST_CASE("order relation is subset containment plus componentwise weight") {
  FinitePoset p = build_weighted_boolean(2, 2);
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      const auto& ea = p.elements[a];
      const auto& eb = p.elements[b];
      bool expected = (ea.base & ~eb.base) == 0 &&
                      leq_componentwise(ea.weight, eb.weight);
      CHECK(p.leq(a, b) == expected);
    }
  // four atoms above the bottom: two letters x two colors
  CHECK(p.upper_covers(0).size() == 4);
}

TEST_CASE("synthetic top covers exactly the full-support elements") {
  FinitePoset p = add_top(build_weighted_boolean(3, 2));
  REQUIRE(p.has_top);
  int t = p.top_id();
  CHECK(p.element_str(t) == "1-hat");
  auto below_top = p.lower_covers(t);
  CHECK(below_top.size() == 4);  // weak compositions of 3 into 2 colors
  for (int id : below_top)
    CHECK(p.elements[id].base == 0b111u);
  for (int a = 0; a < p.size(); ++a) CHECK(p.leq(a, t));
}

TEST_CASE("intervals are graded: all maximal chains have equal length") {
  FinitePoset p = add_top(build_weighted_boolean(3, 2));
  Interval full = closed_interval(p, 0, p.top_id());
  auto chains = maximal_chains(full);
  CHECK(chains.size() == 48);  // 3! orders x 2^3 colors x top edge
  for (auto& c : chains) CHECK(c.size() == 5);
  CHECK_THROWS_AS(closed_interval(p, 2, 1), std::invalid_argument);
}

TEST_CASE("mobius function basics") {
  FinitePoset p = build_weighted_boolean(2, 2);
  CHECK(mobius(p, 0, 0) == 1);
  for (int id : p.upper_covers(0)) CHECK(mobius(p, 0, id) == -1);
  // rank-2 intervals: mu = (number of interior elements) - 1
  for (int b = 0; b < p.size(); ++b) {
    if (p.rank[b] != 2) continue;
    int interior = 0;
    for (int a = 0; a < p.size(); ++a)
      if (a != 0 && a != b && p.leq(0, a) && p.leq(a, b)) ++interior;
    CHECK(mobius(p, 0, b) == interior - 1);
  }
}

TEST_CASE("edge labels: letter plus color, top edge gets n+1") {
  FinitePoset p = add_top(build_weighted_boolean(2, 2));
  for (auto [a, b] : p.covers) {
    EdgeLabel l = el_label(p, a, b);
    if (p.is_top(b)) {
      CHECK(l.letter == 3);
      CHECK(l.color == 1);
    } else {
      uint32_t added = p.elements[b].base & ~p.elements[a].base;
      CHECK(l.letter == __builtin_ctz(added) + 1);
      CHECK(p.elements[b].weight.part(l.color) ==
            p.elements[a].weight.part(l.color) + 1);
    }
  }
  CHECK_THROWS_AS(el_label(p, 0, p.top_id()), std::invalid_argument);
}

TEST_CASE("the labeling is verified shellable on small posets") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k) {
      FinitePoset p = add_top(build_weighted_boolean(n, k));
      ElReport r = verify_el_labeling(p);
      INFO("n=" << n << " k=" << k);
      CHECK(r.pass);
      CHECK(r.violations.empty());
    }
}

TEST_CASE("a deliberately broken labeling is rejected") {
  FinitePoset p = add_top(build_weighted_boolean(2, 1));
  // constant labels make every maximal chain word non-increasing
  ElReport r = verify_el_labeling(
      p, [](const FinitePoset&, int, int) { return EdgeLabel{1, 1}; });
  CHECK(!r.pass);
  CHECK(!r.violations.empty());
}

TEST_CASE("maximal chains of the top interval match colored permutations") {
  FinitePoset p = build_weighted_boolean(3, 2);
  for (const WeakComposition& mu : enumerate_weak_compositions(3, 2)) {
    for (const ColoredPermutation& s : enumerate_colored_permutations(mu)) {
      auto chain = chain_from_permutation(p, s);
      REQUIRE(chain.size() == 4);
      CHECK(permutation_from_chain(p, chain) == s);
      // chain is ascent-free exactly when the word is
      auto w = label_word(p, chain);
      CHECK(is_ascent_free_word(w) == is_ascent_free(s));
    }
    // so the ascent-free chain count is the ascent-free word count
    int top = -1;
    for (int i = 0; i < p.size(); ++i)
      if (p.elements[i].base == 0b111u && p.elements[i].weight == mu) top = i;
    REQUIRE(top >= 0);
    Interval iv = closed_interval(p, 0, top);
    CHECK((long long)ascent_free_maximal_chains(iv).size() == count_ninc(mu));
  }
}

TEST_CASE("ascent-free maximal chains of the augmented poset") {
  FinitePoset p = add_top(build_weighted_boolean(2, 2));
  Interval full = closed_interval(p, 0, p.top_id());
  CHECK(ascent_free_maximal_chains(full).size() == 2);
}
