// The two-variable-set series, its inverse and explicit form, polynomial
// specializations, word inversion over ordered alphabets, the subcomposition
// recursion, and the serialization layer.

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "wba/combinatorics.hpp"
#include "wba/double_series.hpp"
#include "wba/gessel.hpp"
#include "wba/json_io.hpp"
#include "wba/report.hpp"
#include "wba/specializations.hpp"
#include "wba/whitney.hpp"

using namespace wba;

TEST_CASE("alternating series and its inverse, low degrees") {
  DoubleSeries F = alternating_h_series(3);
  CHECK(F.at({}, {}) == 1);
  CHECK(F.at({1}, {1}) == -1);  // -h_1(x) h_1(y)

  DoubleSeries G = invert_double_series(F, 3);
  CHECK(G.at({}, {}) == 1);
  CHECK(G.at({1}, {1}) == 1);

  // frozen degree-2 component: 3 m_11 m_11 + m_11 m_2 + m_2 m_11
  DoubleSeries g2 = ds_component(G, 2);
  CHECK(g2.coef.size() == 3);
  CHECK(g2.at({1, 1}, {1, 1}) == 3);
  CHECK(g2.at({1, 1}, {2}) == 1);
  CHECK(g2.at({2}, {1, 1}) == 1);
  CHECK(g2.at({2}, {2}) == 0);

  // F * G = 1 within the window
  DoubleSeries prod = ds_multiply(F, G, 3, 3);
  DoubleSeries one;
  one.add({}, {}, 1);
  CHECK(prod == one);

  // a series with constant term != 1 is rejected
  DoubleSeries bad;
  bad.add({}, {}, 2);
  CHECK_THROWS_AS(invert_double_series(bad, 1), std::logic_error);
}

TEST_CASE("assembled, inverted, and explicit series agree at low degree") {
  DoubleSeries F = alternating_h_series(3);
  DoubleSeries G = invert_double_series(F, 3);
  CHECK(assemble_lhs_series(3, 3) == G);
  CHECK(explicit_rhs_series(3) == G);
  // the color bound must cover the degree window
  CHECK_THROWS_AS(assemble_lhs_series(2, 1), std::logic_error);
}

TEST_CASE("E1 specialization reads off exponential coefficients") {
  for (int n = 1; n <= 5; ++n) {
    auto c = specialize_E1(basis_to_monomial('h', {n}));
    REQUIRE((int)c.size() == n + 1);
    CHECK(c[n] == Rat(1) / to_rat(factorial(n)));
  }
  // e_2 = (p_11 - p_2)/2
  auto c = specialize_E1(e_k(2));
  REQUIRE(c.size() == 3);
  CHECK(c[2] == Rat(1, 2));
}

TEST_CASE("E2 specialization by elementary length") {
  CHECK(specialize_E2(h_k(3)) == PolynomialT{Rat(0), Rat(1), Rat(-2), Rat(1)});
  for (int n = 1; n <= 4; ++n)
    CHECK(specialize_E2(e_k(n)) == PolynomialT{Rat(0), Rat(1)});
  CHECK(specialize_E2(basis_to_monomial('e', {2, 1})) ==
        PolynomialT{Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("Stirling numbers and the Riordan expansion") {
  auto S = stirling2_table(5);
  CHECK(S[4][2] == 7);
  CHECK(S[5][3] == 25);
  for (int n = 1; n <= 5; ++n) {
    CHECK(S[n][1] == 1);
    CHECK(S[n][n] == 1);
  }
  auto rio = riordan_expansion(4);
  CHECK(rio[0] == PolynomialT{Rat(1)});
  for (int n = 1; n <= 4; ++n) {
    auto eul = eulerian_polynomial(n);
    PolynomialT want;
    for (long long v : eul) want.push_back(to_rat(v));
    poly_trim(want);
    PolynomialT got = rio[n];
    poly_trim(got);
    CHECK(got == want);
  }
}

TEST_CASE("word inversion over total and product orders") {
  GesselReport chain = gessel_check(chain_alphabet(2), 4);
  CHECK(chain.pass);
  CHECK(chain.words_checked == 31);  // 2^0 + ... + 2^4

  GesselReport prod = gessel_check(product_order_alphabet(2), 3);
  CHECK(prod.pass);
  CHECK(prod.words_checked == 85);  // 4^0 + ... + 4^3

  OrderedAlphabet A = product_order_alphabet(2);
  CHECK(A.size == 4);
  CHECK(word_str(A, {0, 3}) == A.names[0] + " " + A.names[3]);
}

TEST_CASE("subcomposition recursion and interval characteristics") {
  for (auto mu : {WeakComposition{}, WeakComposition({1}),
                  WeakComposition({2}), WeakComposition({1, 1}),
                  WeakComposition({2, 1})})
    CHECK(whitney_recursion_check(mu).pass);

  CHECK(interval_top_characteristic(WeakComposition({1})) ==
        SymFunc{{{1}, Rat(1)}});
  CHECK(interval_top_characteristic(WeakComposition({2})) ==
        basis_to_monomial('e', {2}));
  // content (1,1): trivial + 2 sign = m_2 + 3 m_11
  CHECK(interval_top_characteristic(WeakComposition({1, 1})) ==
        SymFunc{{{2}, Rat(1)}, {{1, 1}, Rat(3)}});
}

TEST_CASE("machine report lines exclude anything nondeterministic") {
  CheckReport r;
  r.name = "demo";
  r.params["n"] = 3;
  r.pass = true;
  r.seconds = 1.25;
  std::string a = report_to_json(r).dump();
  r.seconds = 99.75;  // timing must not leak into the machine line
  std::string b = report_to_json(r).dump();
  CHECK(a == b);
  CHECK(a.find("seconds") == std::string::npos);

  std::ostringstream machine1, machine2, human;
  emit_reports({r}, machine1, human);
  r.seconds = 0.0;
  emit_reports({r}, machine2, human);
  CHECK(machine1.str() == machine2.str());
  CHECK(human.str().find("demo") != std::string::npos);
}

TEST_CASE("serialization formats") {
  CHECK(partition_key({3, 1}) == "3,1");
  CHECK(partition_key({}) == "");

  FinitePoset p = add_top(build_weighted_boolean(1, 1));
  std::string dot = poset_to_dot(p, true);
  CHECK(dot.find("digraph poset") != std::string::npos);
  CHECK(dot.find("1-hat") != std::string::npos);
  CHECK(dot.find("2^1") != std::string::npos);  // top edge label n+1 = 2

  ordered_json pj = poset_to_json(p, false);
  CHECK(pj["elements"].size() == 3);
  CHECK(pj["covers"].size() == 2);

  ordered_json sj = symfunc_to_json(SymFunc{{{2, 1}, Rat(1, 3)}});
  REQUIRE(sj.size() == 1);
  CHECK(sj[0]["partition"] == "2,1");
  CHECK(sj[0]["numerator"] == "1");
  CHECK(sj[0]["denominator"] == "3");

  DoubleSeries d;
  d.add({1}, {1}, Rat(-2));
  ordered_json dj = double_series_to_json(d);
  REQUIRE(dj.size() == 1);
  CHECK(dj[0]["x_partition"] == "1");
  CHECK(dj[0]["numerator"] == "-2");
}
