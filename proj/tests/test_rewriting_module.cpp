// Colored permutations, the rewriting straightener, and the presented
// modules.  Dimension and character values were computed independently and
// are frozen here.

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "wba/char_table.hpp"
#include "wba/combinatorics.hpp"
#include "wba/module.hpp"
#include "wba/rewriting.hpp"

using namespace wba;

namespace {

// every content of size <= n_max with colors in [k]
std::vector<WeakComposition> small_contents(int n_max, int k) {
  std::vector<WeakComposition> out;
  for (int n = 1; n <= n_max; ++n)
    for (auto& mu : enumerate_weak_compositions(n, k)) out.push_back(mu);
  return out;
}

}  // namespace

TEST_CASE("colored permutation enumeration counts") {
  CHECK(enumerate_colored_permutations(WeakComposition({1, 1})).size() == 4);
  CHECK(enumerate_colored_permutations(WeakComposition({2, 1})).size() == 18);
  CHECK(enumerate_colored_permutations(WeakComposition({1, 1, 1})).size() ==
        36);
  CHECK(enumerate_colored_permutations(WeakComposition({2, 2, 1})).size() ==
        3600);
  // the empty content has exactly one (empty) word
  CHECK(enumerate_colored_permutations(WeakComposition{}).size() == 1);

  // encodings are injective
  auto words = enumerate_colored_permutations(WeakComposition({2, 1}));
  std::set<uint64_t> codes;
  for (auto& w : words) codes.insert(encode_word(w));
  CHECK(codes.size() == words.size());
}

TEST_CASE("ascent = letter increase with weak color increase") {
  // 1^2 2^1: letter rises but color falls -> no ascent
  CHECK(is_ascent_free(ColoredPermutation{{{1, 2}, {2, 1}}}));
  // 1^1 2^2: letter rises, color weakly rises -> ascent
  CHECK(!is_ascent_free(ColoredPermutation{{{1, 1}, {2, 2}}}));
  CHECK(ascent_positions(ColoredPermutation{{{1, 1}, {2, 1}, {3, 1}}}) ==
        std::vector<int>{1, 2});
  CHECK(is_ascent_free(ColoredPermutation{{{3, 1}, {2, 1}, {1, 1}}}));
}

TEST_CASE("ascent-free counts match the frozen table") {
  const std::map<std::vector<int>, long long> expected = {
      {{1}, 1},
      {{1, 1}, 3},        {{2}, 1},
      {{1, 1, 1}, 19},    {{2, 1}, 7},        {{3}, 1},
      {{1, 1, 1, 1}, 211}, {{2, 1, 1}, 83},   {{2, 2}, 33},
      {{3, 1}, 15},       {{4}, 1},
      {{1, 1, 1, 1, 1}, 3651}, {{2, 1, 1, 1}, 1501}, {{2, 2, 1}, 621},
      {{3, 1, 1}, 311},   {{3, 2}, 131},      {{4, 1}, 31},
      {{5}, 1},
  };
  for (auto& [parts, want] : expected)
    CHECK(count_ninc(WeakComposition(parts)) == want);
  // spot checks at size six
  CHECK(count_ninc(WeakComposition({6})) == 1);
  CHECK(count_ninc(WeakComposition({5, 1})) == 63);
  CHECK(count_ninc(WeakComposition({3, 3})) == 883);

  // the count only depends on the multiset of color multiplicities
  CHECK(count_ninc(WeakComposition({1, 2})) ==
        count_ninc(WeakComposition({2, 1})));
  CHECK(count_ninc(WeakComposition({0, 2, 1})) ==
        count_ninc(WeakComposition({2, 1})));
}

TEST_CASE("normal forms terminate with {-1,0,1} coefficients") {
  for (auto& mu : small_contents(4, 3)) {
    NormalFormTable t = build_normal_forms(mu);
    REQUIRE((long long)t.ninc_ids.size() == count_ninc(mu));
    std::set<int> ninc(t.ninc_ids.begin(), t.ninc_ids.end());
    for (int i = 0; i < (int)t.words.size(); ++i) {
      long long mi = rewrite_measure(t.words[i]);
      for (auto [col, v] : t.nf[i]) {
        CHECK((v == 1 || v == -1));
        CHECK(ninc.count(col) == 1);  // support is ascent-free
        if (col != i) CHECK(rewrite_measure(t.words[col]) > mi);
      }
      if (ninc.count(i))  // ascent-free words are already normal
        CHECK(t.nf[i] == std::vector<std::pair<int, long long>>{{i, 1}});
    }
  }
}

TEST_CASE("straightening a single ascent against the frozen expansion") {
  PresentedModule M = build_exterior_module(WeakComposition({1, 1}));
  REQUIRE(M.dim() == 3);
  Vec v = straighten(M, ColoredPermutation{{{1, 1}, {2, 2}}});
  // 1^1 2^2 = -(1^2 2^1) - (2^1 1^2) - (2^2 1^1)
  REQUIRE(v.size() == 3);
  for (auto& [id, c] : v) CHECK(c == -1);
  std::set<std::string> names;
  for (auto& [id, c] : v) names.insert(M.gens[id].str());
  CHECK(names == std::set<std::string>{"1^2 2^1", "2^1 1^2", "2^2 1^1"});

  // basis elements straighten to themselves
  for (int id : M.basis) {
    Vec b = straighten(M, M.gens[id]);
    REQUIRE(b.size() == 1);
    CHECK(b.begin()->first == id);
    CHECK(b.begin()->second == 1);
  }
}

TEST_CASE("module dimension equals the ascent-free count") {
  for (auto& mu : small_contents(4, 2)) {
    PresentedModule M = build_exterior_module(mu);
    CHECK(M.dim() == count_ninc(mu));
    CHECK(exterior_relation_rank(mu) ==
          (long long)M.gens.size() - count_ninc(mu));
  }
}

TEST_CASE("linear and rewriting straighteners agree term by term") {
  for (auto& mu : small_contents(4, 2)) {
    PresentedModule M = build_exterior_module(mu);
    NormalFormTable t = build_normal_forms(mu);
    for (int i = 0; i < (int)M.gens.size(); ++i) {
      Vec lin = straighten(M, M.gens[i]);
      int j = t.index.at(encode_word(M.gens[i]));
      Vec rew;
      for (auto [col, v] : t.nf[j])
        rew[M.gen_id(t.words[col])] = to_rat(v);
      CHECK(lin == rew);
    }
  }
}

TEST_CASE("the letter action is a group action") {
  PresentedModule M = build_exterior_module(WeakComposition({2, 1}));
  auto perms = all_permutations(3);
  for (auto& tau : perms)
    for (auto& pi : perms) {
      std::vector<int> comp(3);
      for (int i = 0; i < 3; ++i) comp[i] = tau[pi[i] - 1];
      for (int id : M.basis) {
        Vec v;
        v[id] = 1;
        CHECK(act(M, comp, v) == act(M, tau, act(M, pi, v)));
      }
    }
}

TEST_CASE("frozen character values on conjugacy class representatives") {
  struct Row {
    std::vector<int> mu;
    std::vector<long long> vals;  // in partitions_of(n) order, lex-descending
  };
  // class order: n=2 -> (2),(1,1); n=3 -> (3),(2,1),(1,1,1)
  const std::vector<Row> table = {
      {{2}, {-1, 1}},
      {{1, 1}, {-1, 3}},
      {{3}, {1, -1, 1}},
      {{2, 1}, {1, -3, 7}},
      {{1, 1, 1}, {1, -5, 19}},
  };
  for (auto& row : table) {
    WeakComposition mu(row.mu);
    int n = mu.size();
    std::vector<std::vector<int>> taus;
    for (auto& t : partitions_of(n)) taus.push_back(cycle_type_representative(t));
    CHECK(exterior_character_values(mu, taus) == row.vals);
  }
}

TEST_CASE("trace routes agree: linear, rewriting, and per-class") {
  for (auto& mu : small_contents(4, 2)) {
    PresentedModule M = build_exterior_module(mu);
    NormalFormTable t = build_normal_forms(mu);
    for (auto& type : partitions_of(mu.size())) {
      std::vector<int> tau = cycle_type_representative(type);
      CHECK(module_trace(M, tau) == to_rat(rewriting_trace(t, tau)));
    }
  }
}

TEST_CASE("symmetric-side modules are one dimensional and trivial") {
  for (auto& mu : small_contents(3, 3)) {
    PresentedModule M = build_symmetric_module(mu);
    REQUIRE(M.dim() == 1);
    for (auto& type : partitions_of(mu.size()))
      CHECK(module_trace(M, cycle_type_representative(type)) == 1);
  }
}
