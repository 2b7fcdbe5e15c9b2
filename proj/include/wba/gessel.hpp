#pragma once
#include <string>
#include <vector>

#include "wba/check.hpp"

/*
 * Word-level inversion over a partially ordered alphabet.  A link a->b is
 * allowed when a is NOT below-or-equal b; W is the set of words all of
 * whose adjacent links are allowed, Wbar the set where all are forbidden,
 * and the empty word and single letters lie in both.  The inverse relation
 * between the two word series is equivalent to the per-word convolution
 *
 *   sum over splittings w = uv, u in W, v in Wbar, of (-1)^|v|  =  [w empty],
 *
 * which is checked exhaustively on all words up to a length cap.
 */

namespace wba {

struct OrderedAlphabet {
  int size = 0;
  std::vector<std::vector<char>> leq;  // leq[a][b]: a <= b
  std::vector<std::string> names;
};

// [k] x [k] with the product order; letter (a,b) named "a.b"
inline OrderedAlphabet product_order_alphabet(int k) {
  OrderedAlphabet A;
  A.size = k * k;
  A.leq.assign(A.size, std::vector<char>(A.size, 0));
  for (int a1 = 1; a1 <= k; ++a1)
    for (int b1 = 1; b1 <= k; ++b1)
      A.names.push_back(std::to_string(a1) + "." + std::to_string(b1));
  for (int i = 0; i < A.size; ++i)
    for (int j = 0; j < A.size; ++j) {
      int a1 = i / k, b1 = i % k, a2 = j / k, b2 = j % k;
      A.leq[i][j] = (a1 <= a2 && b1 <= b2);
    }
  return A;
}

inline OrderedAlphabet chain_alphabet(int k) {
  OrderedAlphabet A;
  A.size = k;
  A.leq.assign(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) {
    A.names.push_back(std::to_string(i + 1));
    for (int j = i; j < k; ++j) A.leq[i][j] = 1;
  }
  return A;
}

struct GesselReport {
  bool pass = true;
  long long words_checked = 0;
  std::vector<std::string> witnesses;
};

inline std::string word_str(const OrderedAlphabet& A,
                            const std::vector<int>& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += A.names[w[i]];
  }
  return s.empty() ? "(empty)" : s;
}

inline GesselReport gessel_check(const OrderedAlphabet& A, int L_max) {
  GesselReport rep;
  std::vector<int> w;
  // prefW[s]: w[0..s-1] in W;  suffB[s]: w[s..L-1] in Wbar
  auto convolution = [&]() -> long long {
    int L = (int)w.size();
    std::vector<char> prefW(L + 1, 1), suffB(L + 1, 1);
    for (int s = 2; s <= L; ++s)
      prefW[s] = prefW[s - 1] && !A.leq[w[s - 2]][w[s - 1]];
    for (int s = L - 2; s >= 0; --s)
      suffB[s] = suffB[s + 1] && A.leq[w[s]][w[s + 1]];
    long long total = 0;
    for (int s = 0; s <= L; ++s)
      if (prefW[s] && suffB[s]) total += ((L - s) % 2 ? -1 : 1);
    return total;
  };
  auto visit = [&](auto&& self) -> void {
    long long got = convolution();
    long long want = w.empty() ? 1 : 0;
    ++rep.words_checked;
    if (got != want) {
      rep.pass = false;
      if (rep.witnesses.size() < 5)
        rep.witnesses.push_back(word_str(A, w) + " -> " +
                                std::to_string(got));
    }
    if ((int)w.size() == L_max) return;
    for (int a = 0; a < A.size; ++a) {
      w.push_back(a);
      self(self);
      w.pop_back();
    }
  };
  visit(visit);
  return rep;
}

}  // namespace wba
