#pragma once

// Seeded random braid words for property tests and the selftest command.

#include <cstdint>
#include <random>
#include <vector>

#include "orbit_braid/braid_word.hpp"

namespace orbit_braid {

using Rng = std::mt19937_64;

inline BraidLetter random_letter(Rng& rng, const GroupParams& g) {
  // n-1 swaps plus the rotation, each with two signs
  std::uniform_int_distribution<int> pick(0, 2 * g.n - 1);
  const int v = pick(rng);
  const int sign = v % 2 == 0 ? 1 : -1;
  const int which = v / 2;
  return which == g.n - 1 ? BraidLetter::rot(sign) : BraidLetter::swap(which, sign);
}

/// Freely reduced word of exactly `len` letters.
inline BraidWord random_word_exact(Rng& rng, const GroupParams& g, int len) {
  BraidWord w;
  while (static_cast<int>(w.size()) < len) {
    const BraidLetter l = random_letter(rng, g);
    if (!w.empty() && w.letters().back().cancels(l)) continue;
    w.push_back(l);
  }
  return w;
}

/// Length drawn uniformly from [0, max_len].
inline BraidWord random_word(Rng& rng, const GroupParams& g, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  return random_word_exact(rng, g, len(rng));
}

/// Pure word of length <= max_len, by rejection.
inline BraidWord random_pure_word(Rng& rng, const GroupParams& g, int max_len) {
  while (true) {
    BraidWord w = random_word(rng, g, max_len);
    if (is_pure(w, g)) return w;
  }
}

/// Relators equal to the identity: braid, far commutation and b b_k = b_k b
/// for k >= 1, written as single words r with r == e.
inline std::vector<BraidWord> relators(const GroupParams& g) {
  std::vector<BraidWord> out;
  const auto s = [](int k, int sign = 1) { return BraidLetter::swap(k, sign); };
  for (int k = 0; k + 2 < g.n; ++k) {
    out.push_back(BraidWord{s(k), s(k + 1), s(k), s(k + 1, -1), s(k, -1), s(k + 1, -1)});
  }
  for (int k = 0; k + 1 < g.n; ++k) {
    for (int l = k + 2; l + 1 < g.n; ++l) {
      out.push_back(BraidWord{s(k), s(l), s(k, -1), s(l, -1)});
    }
  }
  for (int k = 1; k + 1 < g.n; ++k) {
    out.push_back(BraidWord{s(k), BraidLetter::rot(), s(k, -1), BraidLetter::rot(-1)});
  }
  return out;
}

}  // namespace orbit_braid
