#pragma once
#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "wba/weak_composition.hpp"

/*
 * A colored permutation of content mu is a word sigma(1)...sigma(n) whose
 * letters form a permutation of [n] and where letter sigma(i) carries the
 * color color(i) >= 1; exactly mu_j letters carry color j.
 *
 * Position i in [n-1] is an ascent when the letter increases AND the color
 * weakly increases:  sigma(i) < sigma(i+1) and color(i) <= color(i+1).
 * Ninc_mu is the set of ascent-free words of content mu.
 */

namespace wba {

struct ColoredPermutation {
  // (letter, color), both 1-based
  std::vector<std::pair<int, int>> w;

  int n() const { return (int)w.size(); }
  int letter(int i) const { return w[i - 1].first; }   // 1-based position
  int color(int i) const { return w[i - 1].second; }

  bool valid() const {
    std::vector<char> seen(n() + 1, 0);
    for (auto [x, c] : w) {
      if (x < 1 || x > n() || c < 1 || seen[x]) return false;
      seen[x] = 1;
    }
    return true;
  }

  WeakComposition content() const {
    std::vector<int> cnt;
    for (auto [x, c] : w) {
      (void)x;
      if ((int)cnt.size() < c) cnt.resize(c, 0);
      cnt[c - 1] += 1;
    }
    return WeakComposition(std::move(cnt));
  }

  // e.g. "2^1 1^4 3^2"
  std::string str() const {
    std::string s;
    for (auto [x, c] : w) {
      if (!s.empty()) s += ' ';
      s += std::to_string(x) + "^" + std::to_string(c);
    }
    return s.empty() ? "()" : s;
  }

  bool operator==(const ColoredPermutation& o) const { return w == o.w; }
  bool operator<(const ColoredPermutation& o) const { return w < o.w; }
};

inline std::vector<int> ascent_positions(const ColoredPermutation& s) {
  std::vector<int> out;
  for (int i = 1; i < s.n(); ++i)
    if (s.letter(i) < s.letter(i + 1) && s.color(i) <= s.color(i + 1))
      out.push_back(i);
  return out;
}

inline bool is_ascent_free(const ColoredPermutation& s) {
  for (int i = 1; i < s.n(); ++i)
    if (s.letter(i) < s.letter(i + 1) && s.color(i) <= s.color(i + 1))
      return false;
  return true;
}

// dense word key: 8 bits per position (letter<<4 | color); needs n, colors <= 15
inline uint64_t encode_word(const ColoredPermutation& s) {
  assert(s.n() <= 8);
  uint64_t key = 0;
  for (int i = 1; i <= s.n(); ++i) {
    assert(s.letter(i) <= 15 && s.color(i) <= 15);
    key = key << 8 | (uint64_t)(s.letter(i) << 4 | s.color(i));
  }
  return key;
}

// all of S_mu in lexicographic order: by letter sequence, then color sequence
inline std::vector<ColoredPermutation> enumerate_colored_permutations(
    const WeakComposition& mu) {
  int n = mu.size();
  std::vector<int> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = i + 1;
  std::vector<int> colors0;
  for (int j = 1; j <= mu.length(); ++j)
    colors0.insert(colors0.end(), mu.part(j), j);

  std::vector<ColoredPermutation> out;
  do {
    std::vector<int> colors = colors0;  // sorted ascending = lex least
    do {
      ColoredPermutation s;
      s.w.resize(n);
      for (int i = 0; i < n; ++i) s.w[i] = {letters[i], colors[i]};
      out.push_back(std::move(s));
    } while (std::next_permutation(colors.begin(), colors.end()));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

inline std::vector<ColoredPermutation> enumerate_ninc(
    const WeakComposition& mu) {
  std::vector<ColoredPermutation> out;
  for (auto& s : enumerate_colored_permutations(mu))
    if (is_ascent_free(s)) out.push_back(s);
  return out;
}

inline long long count_ninc(const WeakComposition& mu) {
  long long c = 0;
  for (auto& s : enumerate_colored_permutations(mu))
    if (is_ascent_free(s)) ++c;
  return c;
}

// relabel letters through tau (tau[x-1] = image of x); colors ride along
inline ColoredPermutation act_letters(const std::vector<int>& tau,
                                      const ColoredPermutation& s) {
  ColoredPermutation r = s;
  for (auto& [x, c] : r.w) {
    (void)c;
    x = tau[x - 1];
  }
  return r;
}

}  // namespace wba
