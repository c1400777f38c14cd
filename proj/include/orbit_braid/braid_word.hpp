#pragma once

// Words in the orbit braid generators b, b_k, and the pure generators
// A_i, A_{iqj} written in terms of them.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "orbit_braid/errors.hpp"
#include "orbit_braid/params.hpp"

namespace orbit_braid {

/// b^{±1} (kind Rot) or b_k^{±1} (kind Swap).
struct BraidLetter {
  enum class Kind : std::uint8_t { Rot, Swap };

  Kind kind = Kind::Rot;
  int k = 0;  // Swap index; unused for Rot
  int sign = 1;

  static BraidLetter rot(int s = 1) { return {Kind::Rot, 0, s}; }
  static BraidLetter swap(int k, int s = 1) { return {Kind::Swap, k, s}; }

  bool is_rot() const { return kind == Kind::Rot; }
  BraidLetter inverse() const { return {kind, k, -sign}; }
  bool cancels(const BraidLetter& o) const {
    return kind == o.kind && k == o.k && sign == -o.sign;
  }
  bool in_range(const GroupParams& g) const {
    return is_rot() || (k >= 0 && k <= g.n - 2);
  }

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// Freely reduced word in the braid generators. Relations are never applied.
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(std::initializer_list<BraidLetter> l) { append(l); }
  explicit BraidWord(const std::vector<BraidLetter>& l) { append(l); }

  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(const BraidLetter& l) {
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  template <class Range>
  void append(const Range& r) {
    for (const auto& l : r) push_back(l);
  }

  BraidWord inverse() const {
    BraidWord out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      out.push_back(it->inverse());
    }
    return out;
  }

  friend BraidWord operator*(BraidWord a, const BraidWord& b) {
    a.append(b);
    return a;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<BraidLetter> letters_;
};

inline BraidWord power(const BraidWord& w, int k) {
  const BraidWord base = k < 0 ? w.inverse() : w;
  BraidWord out;
  for (int t = 0; t < (k < 0 ? -k : k); ++t) out.append(base);
  return out;
}

inline void check_range(const BraidWord& w, const GroupParams& g) {
  for (const auto& l : w) {
    if (!l.in_range(g)) {
      throw IndexOutOfRange("generator b" + std::to_string(l.k) +
                            " outside b0..b" + std::to_string(g.n - 2) +
                            " for n=" + std::to_string(g.n));
    }
  }
}

/// Element (g, σ) of ℤ_p^{×n} ⋊ Σ_n. `perm[pos]` is the strand found at
/// position `pos`; `gvec[s]` is the rotation count of strand s.
/// Product: (g, σ)(h, τ) = (g + σ·h, στ) with (σ·h)_k = h_{σ⁻¹(k)}.
struct PermZp {
  std::vector<int> perm;
  std::vector<int> gvec;
  int p = 1;

  static PermZp identity(const GroupParams& g) {
    PermZp e;
    e.p = g.p;
    e.perm.resize(static_cast<std::size_t>(g.n));
    std::iota(e.perm.begin(), e.perm.end(), 0);
    e.gvec.assign(static_cast<std::size_t>(g.n), 0);
    return e;
  }

  bool is_identity() const {
    for (std::size_t k = 0; k < perm.size(); ++k) {
      if (perm[k] != static_cast<int>(k) || gvec[k] != 0) return false;
    }
    return true;
  }

  friend PermZp operator*(const PermZp& a, const PermZp& b) {
    PermZp out;
    out.p = a.p;
    const std::size_t n = a.perm.size();
    out.perm.resize(n);
    out.gvec.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      out.perm[k] = a.perm[static_cast<std::size_t>(b.perm[k])];
      // σ(k') = k  ⇒  (σ·h)_k = h_{k'}
      out.gvec[static_cast<std::size_t>(a.perm[k])] = b.gvec[k];
    }
    for (std::size_t k = 0; k < n; ++k) {
      out.gvec[k] = mod(a.gvec[k] + out.gvec[k], a.p);
    }
    return out;
  }

  friend bool operator==(const PermZp&, const PermZp&) = default;
};

inline PermZp perm_image(const BraidLetter& l, const GroupParams& g) {
  PermZp e = PermZp::identity(g);
  if (l.is_rot()) {
    e.gvec[0] = mod(l.sign, g.p);
  } else {
    std::swap(e.perm[static_cast<std::size_t>(l.k)],
              e.perm[static_cast<std::size_t>(l.k + 1)]);
  }
  return e;
}

/// Image in ℤ_p^{×n} ⋊ Σ_n, letters multiplied left to right.
inline PermZp perm_image(const BraidWord& w, const GroupParams& g) {
  check_range(w, g);
  PermZp acc = PermZp::identity(g);
  for (const auto& l : w) acc = acc * perm_image(l, g);
  return acc;
}

inline bool is_pure(const BraidWord& w, const GroupParams& g) {
  return perm_image(w, g).is_identity();
}

/// Pure generator A_i (three == false) or A_{iqj}, with sign.
struct ALetter {
  int i = 0;
  int q = 0;
  int j = 0;
  bool three = false;
  int sign = 1;

  static ALetter single(int i, int s = 1) { return {i, 0, 0, false, s}; }
  static ALetter triple(int i, int q, int j, int s = 1) {
    return {i, q, j, true, s};
  }

  ALetter inverse() const { return {i, q, j, three, -sign}; }
  bool cancels(const ALetter& o) const {
    return i == o.i && q == o.q && j == o.j && three == o.three &&
           sign == -o.sign;
  }
  bool in_range(const GroupParams& g) const {
    if (!three) return i >= 0 && i < g.n;
    return i >= 0 && i < j && j < g.n && q >= 0 && q < g.p;
  }

  friend bool operator==(const ALetter&, const ALetter&) = default;
};

using AWord = std::vector<ALetter>;

inline AWord reduce(const AWord& w) {
  AWord out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline AWord inverse(const AWord& w) {
  AWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

/// T_i = (b_{i-1} ⋯ b_0) b (b_0 ⋯ b_{i-1}): strand i travels to the axis,
/// rotates once, and returns.
inline BraidWord orbit_loop(int i) {
  BraidWord t;
  for (int k = i - 1; k >= 0; --k) t.push_back(BraidLetter::swap(k));
  t.push_back(BraidLetter::rot());
  for (int k = 0; k < i; ++k) t.push_back(BraidLetter::swap(k));
  return t;
}

/// A_i = T_i^p;  A_{iqj} = T_i^q (b_i ⋯ b_{j-2}) b_{j-1}² (b_{j-2}⁻¹ ⋯ b_i⁻¹) T_i^{-q}.
inline BraidWord expand_A(const ALetter& a, const GroupParams& g) {
  if (!a.in_range(g)) {
    throw IndexOutOfRange("pure generator index outside p=" +
                          std::to_string(g.p) + " n=" + std::to_string(g.n));
  }
  const BraidWord t = orbit_loop(a.i);
  BraidWord out;
  if (!a.three) {
    out = power(t, g.p);
  } else {
    BraidWord chain;
    for (int k = a.i; k <= a.j - 2; ++k) chain.push_back(BraidLetter::swap(k));
    BraidWord core = chain;
    core.push_back(BraidLetter::swap(a.j - 1));
    core.push_back(BraidLetter::swap(a.j - 1));
    core = core * chain.inverse();
    out = power(t, a.q) * core * power(t, -a.q);
  }
  return a.sign < 0 ? out.inverse() : out;
}

inline BraidWord expand_A(const AWord& w, const GroupParams& g) {
  BraidWord out;
  for (const auto& a : w) out = out * expand_A(a, g);
  return out;
}

/// Deletes strand 0 from a pure word by tracking its position. The result
/// lives on (p, n-1) with strands renumbered 0..n-2.
inline BraidWord forget_strand0(const BraidWord& w, const GroupParams& g) {
  if (g.n == 1) throw Underflow("cannot forget a strand when n = 1");
  if (!is_pure(w, g)) throw NotPure("forget_strand0 needs a pure braid word");
  int m = 0;
  BraidWord out;
  for (const auto& l : w) {
    if (l.is_rot()) {
      if (m != 0) out.push_back(l);
    } else if (l.k == m) {
      m = l.k + 1;
    } else if (l.k + 1 == m) {
      m = l.k;
    } else if (l.k + 1 < m) {
      out.push_back(l);
    } else {
      out.push_back(BraidLetter::swap(l.k - 1, l.sign));
    }
  }
  return out;
}

}  // namespace orbit_braid
