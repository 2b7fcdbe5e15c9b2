// Integer partitions, weak compositions, permutation statistics, and skew
// hooks.  Expected values were computed independently and are frozen here.

#include <catch2/catch_amalgamated.hpp>

#include "wba/combinatorics.hpp"
#include "wba/partition.hpp"
#include "wba/skew_hook.hpp"
#include "wba/weak_composition.hpp"

using namespace wba;

TEST_CASE("partition enumeration is lex-descending and complete") {
  auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition{4});
  CHECK(p4[1] == Partition{3, 1});
  CHECK(p4[2] == Partition{2, 2});
  CHECK(p4[3] == Partition{2, 1, 1});
  CHECK(p4[4] == Partition{1, 1, 1, 1});
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(8).size() == 22);
  // degenerate case: one empty partition of 0
  REQUIRE(partitions_of(0).size() == 1);
  CHECK(partitions_of(0)[0].empty());
  for (auto& lam : partitions_of(7)) {
    CHECK(is_partition(lam));
    CHECK(weight(lam) == 7);
  }
}

TEST_CASE("factorials, binomials, class sizes") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);

  // conjugacy class sizes in S_4 must sum to 4!
  long long total = 0;
  for (auto& t : partitions_of(4)) total += class_size(t);
  CHECK(total == 24);
  CHECK(class_size(Partition{4}) == 6);
  CHECK(class_size(Partition{3, 1}) == 8);
  CHECK(class_size(Partition{2, 2}) == 3);
  CHECK(class_size(Partition{2, 1, 1}) == 6);
  CHECK(class_size(Partition{1, 1, 1, 1}) == 1);
}

TEST_CASE("cycle type representatives have the requested type") {
  for (int n = 1; n <= 6; ++n)
    for (auto& t : partitions_of(n)) {
      std::vector<int> tau = cycle_type_representative(t);
      REQUIRE((int)tau.size() == n);
      // recover the cycle type by walking the functional graph
      std::vector<char> used(n + 1, 0);
      Partition cycles;
      for (int s = 1; s <= n; ++s) {
        if (used[s]) continue;
        int len = 0, x = s;
        while (!used[x]) {
          used[x] = 1;
          x = tau[x - 1];
          ++len;
        }
        cycles.push_back(len);
      }
      CHECK(sort_to_partition(cycles) == t);
    }
}

TEST_CASE("run-length type of a permutation word") {
  // 5 1 2 6 4 7 3 splits into ascending runs 5 | 126 | 47 | 3
  CHECK(type_partition({5, 1, 2, 6, 4, 7, 3}) == Partition{3, 2, 1, 1});
  CHECK(type_partition({1, 2, 3}) == Partition{3});
  CHECK(type_partition({3, 2, 1}) == Partition{1, 1, 1});
  CHECK(type_partition({1}) == Partition{1});
}

TEST_CASE("Eulerian polynomials, t^(des+1) convention") {
  CHECK(eulerian_polynomial(1) == std::vector<long long>{0, 1});
  CHECK(eulerian_polynomial(2) == std::vector<long long>{0, 1, 1});
  CHECK(eulerian_polynomial(3) == std::vector<long long>{0, 1, 4, 1});
  CHECK(eulerian_polynomial(4) == std::vector<long long>{0, 1, 11, 11, 1});
  // coefficients of A_n sum to n!
  long long s = 0;
  for (long long c : eulerian_polynomial(6)) s += c;
  CHECK(s == 720);
}

TEST_CASE("weak compositions canonicalize and enumerate") {
  WeakComposition mu({2, 0, 1, 0});
  CHECK(mu.length() == 3);  // trailing zero stripped, interior zero kept
  CHECK(mu.size() == 3);
  CHECK(mu.part(2) == 0);
  CHECK(mu.part(9) == 0);
  CHECK(mu.str() == "(2,0,1)");
  CHECK(mu.support() == std::vector<int>{1, 3});
  CHECK(mu.sorted() == Partition{2, 1});
  CHECK(WeakComposition({1, 2}) == WeakComposition({1, 2, 0}));

  auto w32 = enumerate_weak_compositions(3, 2);
  REQUIRE(w32.size() == 4);
  CHECK(w32[0] == WeakComposition({3}));
  CHECK(w32[1] == WeakComposition({2, 1}));
  CHECK(w32[2] == WeakComposition({1, 2}));
  CHECK(w32[3] == WeakComposition({0, 3}));
  CHECK(enumerate_weak_compositions(4, 3).size() == 15);

  // subcompositions of (2,1): 3 * 2 choices
  CHECK(enumerate_subcompositions(WeakComposition({2, 1})).size() == 6);
  CHECK(enumerate_subcompositions(WeakComposition{}).size() == 1);

  CHECK(leq_componentwise(WeakComposition({1, 0, 1}), mu));
  CHECK(!leq_componentwise(WeakComposition({0, 1}), mu));
  CHECK(subtract(mu, WeakComposition({1, 0, 1})) == WeakComposition({1}));
}

TEST_CASE("skew hooks and descent sets") {
  SkewHook h = skew_hook({3, 2, 1, 1, 3});
  CHECK(h.descent_set == std::set<int>{3, 5, 6, 7});
  CHECK((int)h.cells.size() == 10);
  // cells climb at exactly the descents
  for (size_t i = 0; i + 1 < h.cells.size(); ++i) {
    bool climbed = h.cells[i + 1].first == h.cells[i].first + 1;
    CHECK(climbed == (h.descent_set.count((int)i + 1) > 0));
  }
  // round trip through composition_of_descents
  for (auto alpha : std::vector<Composition>{
           {4}, {1, 3}, {2, 2, 1}, {1, 1, 1, 1}, {3, 1, 2}})
    CHECK(composition_of_descents(weight(alpha),
                                  skew_hook(alpha).descent_set) == alpha);
}

TEST_CASE("standard tableaux by descent set sum to the hook-length count") {
  for (auto& lam : std::vector<Partition>{
           {2, 1}, {3, 2}, {2, 2, 1}, {4, 1}, {3, 1, 1}}) {
    int n = weight(lam);
    long long total = 0;
    // iterate over all subsets D of [n-1]
    for (int bits = 0; bits < (1 << (n - 1)); ++bits) {
      std::set<int> D;
      for (int i = 1; i < n; ++i)
        if (bits & (1 << (i - 1))) D.insert(i);
      total += count_syt_with_descents(lam, D);
    }
    CHECK(total == syt_count_hook_length(lam));
  }
  // two tableaux of shape (2,1), one per descent set
  CHECK(count_syt_with_descents({2, 1}, {1}) == 1);
  CHECK(count_syt_with_descents({2, 1}, {2}) == 1);
  CHECK(count_syt_with_descents({2, 1}, {}) == 0);
  CHECK(syt_count_hook_length({2, 1}) == 2);
  CHECK(syt_count_hook_length({3, 2}) == 5);
  CHECK(syt_count_hook_length({4, 3, 2, 1}) == 768);
}
