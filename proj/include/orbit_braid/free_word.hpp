#pragma once

// Words in the free group F_pn on the letters x_{ij}.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbit_braid/errors.hpp"
#include "orbit_braid/params.hpp"

namespace orbit_braid {

struct FreeLetter {
  std::int16_t orbit = 0;
  std::int16_t strand = 0;
  std::int8_t sign = 1;

  FreeLetter() = default;
  FreeLetter(int i, int j, int s = 1)
      : orbit(static_cast<std::int16_t>(i)),
        strand(static_cast<std::int16_t>(j)),
        sign(static_cast<std::int8_t>(s < 0 ? -1 : 1)) {}

  FreeLetter inverse() const { return {orbit, strand, -sign}; }
  bool cancels(const FreeLetter& o) const {
    return orbit == o.orbit && strand == o.strand && sign == -o.sign;
  }
  bool in_range(const GroupParams& g) const {
    return orbit >= 0 && orbit < g.p && strand >= 0 && strand < g.n;
  }

  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
};

/// A word over x_{ij}^{±1}. Not necessarily reduced; every operation below
/// that returns a group element returns it freely reduced.
struct FreeWord {
  std::vector<FreeLetter> letters;

  FreeWord() = default;
  FreeWord(std::initializer_list<FreeLetter> l) : letters(l) {}
  explicit FreeWord(std::vector<FreeLetter> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const FreeLetter& operator[](std::size_t k) const { return letters[k]; }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

inline void check_range(const FreeWord& w, const GroupParams& g) {
  for (const auto& l : w.letters) {
    if (!l.in_range(g)) {
      throw IndexOutOfRange("letter x" + std::to_string(l.orbit) + "." +
                            std::to_string(l.strand) +
                            " outside p=" + std::to_string(g.p) +
                            " n=" + std::to_string(g.n));
    }
  }
}

/// Appends `l` to a reduced buffer, cancelling against its tail.
inline void push_reduced(std::vector<FreeLetter>& out, const FreeLetter& l) {
  if (!out.empty() && out.back().cancels(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

inline FreeWord reduce(const FreeWord& w) {
  std::vector<FreeLetter> out;
  out.reserve(w.size());
  for (const auto& l : w.letters) push_reduced(out, l);
  return FreeWord(std::move(out));
}

inline FreeWord reduce(const FreeWord& w, const GroupParams& g) {
  check_range(w, g);
  return reduce(w);
}

inline bool is_reduced(const FreeWord& w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w[k - 1].cancels(w[k])) return false;
  }
  return true;
}

inline FreeWord inverse(const FreeWord& w) {
  std::vector<FreeLetter> out;
  out.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return FreeWord(std::move(out));
}

/// Reduced product.
inline FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<FreeLetter> out;
  out.reserve(a.size() + b.size());
  for (const auto& l : a.letters) push_reduced(out, l);
  for (const auto& l : b.letters) push_reduced(out, l);
  return FreeWord(std::move(out));
}

inline FreeWord power(const FreeWord& w, int k) {
  const FreeWord base = k < 0 ? inverse(w) : w;
  std::vector<FreeLetter> out;
  out.reserve(base.size() * static_cast<std::size_t>(k < 0 ? -k : k));
  for (int t = 0; t < (k < 0 ? -k : k); ++t) {
    for (const auto& l : base.letters) push_reduced(out, l);
  }
  return FreeWord(std::move(out));
}

/// reduce(a · w · a⁻¹)
inline FreeWord conjugate(const FreeWord& w, const FreeWord& a) {
  return a * w * inverse(a);
}

/// Relabels every letter's orbit index by +k mod p.
inline FreeWord shift_orbits(const FreeWord& w, int k, const GroupParams& g) {
  FreeWord out = w;
  for (auto& l : out.letters) {
    l.orbit = static_cast<std::int16_t>(mod(l.orbit + k, g.p));
  }
  return out;
}

/// ∂ = ∏_{i=0}^{p-1} x_{i,n-1} ⋯ x_{i,0}: the loop around every puncture.
inline FreeWord boundary_word(const GroupParams& g) {
  FreeWord out;
  out.letters.reserve(static_cast<std::size_t>(g.rank()));
  for (int i = 0; i < g.p; ++i) {
    for (int j = g.n - 1; j >= 0; --j) out.letters.emplace_back(i, j);
  }
  return out;
}

/// Δ_i = x_{i,0} x_{i+1,0} ⋯ x_{i+p-1,0} (orbit indices mod p).
inline FreeWord delta_word(const GroupParams& g, int i) {
  if (i < 0 || i >= g.p) {
    throw IndexOutOfRange("delta_word orbit index " + std::to_string(i) +
                          " outside [0," + std::to_string(g.p) + ")");
  }
  FreeWord out;
  for (int k = i; k < i + g.p; ++k) out.letters.emplace_back(mod(k, g.p), 0);
  return out;
}

/// Splits reduced `w` as u · core · u⁻¹ with `core` cyclically reduced.
/// Returns the length of u.
inline std::size_t cyclic_core_offset(const FreeWord& w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo].cancels(w[hi - 1])) {
    ++lo;
    --hi;
  }
  return lo;
}

inline bool is_cyclically_reduced(const FreeWord& w) {
  return is_reduced(w) && (w.size() < 2 || !w[0].cancels(w[w.size() - 1]));
}

/// Finds A with reduce(w) = reduce(A · target · A⁻¹), `target` cyclically
/// reduced. Among rotation matches the shortest A wins, then the smallest
/// rotation offset.
inline std::optional<FreeWord> cyclic_conjugator(const FreeWord& w,
                                                 const FreeWord& target) {
  const FreeWord rw = reduce(w);
  const std::size_t strip = cyclic_core_offset(rw);
  const std::size_t core_len = rw.size() - 2 * strip;
  if (core_len != target.size()) return std::nullopt;
  if (core_len == 0) return FreeWord{};

  const std::span<const FreeLetter> core(rw.letters.data() + strip, core_len);
  const FreeWord prefix(std::vector<FreeLetter>(
      rw.letters.begin(), rw.letters.begin() + static_cast<long>(strip)));

  std::optional<FreeWord> best;
  const std::size_t len = target.size();
  for (std::size_t r = 0; r < len; ++r) {
    // core == target[r..] target[..r]  =>  core = t1⁻¹ · target · t1, t1 = target[..r]
    bool match = true;
    for (std::size_t k = 0; k < len && match; ++k) {
      match = core[k] == target[(r + k) % len];
    }
    if (!match) continue;
    const FreeWord t1(std::vector<FreeLetter>(
        target.letters.begin(), target.letters.begin() + static_cast<long>(r)));
    FreeWord a = prefix * inverse(t1);
    if (!best || a.size() < best->size()) best = std::move(a);
  }
  return best;
}

}  // namespace orbit_braid
