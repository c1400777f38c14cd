#pragma once

// The representation of orbit braids as endomorphisms of F_pn.
//
// Convention: braid letters act left to right, so
//   apply(rho_word(u · v), x) == apply(rho_word(v), apply(rho_word(u), x)).

#include <string>
#include <vector>

#include "orbit_braid/braid_word.hpp"
#include "orbit_braid/free_word.hpp"

namespace orbit_braid {

/// Endomorphism of F_pn given by the images of its pn generators.
class EndoF {
 public:
  EndoF() = default;
  EndoF(GroupParams g, std::vector<FreeWord> images)
      : params_(g), images_(std::move(images)) {
    if (images_.size() != static_cast<std::size_t>(g.rank())) {
      throw ParamsMismatch("endomorphism needs " + std::to_string(g.rank()) +
                           " images, got " + std::to_string(images_.size()));
    }
    for (auto& w : images_) w = reduce(w, params_);
  }

  static EndoF identity(const GroupParams& g) {
    std::vector<FreeWord> im;
    im.reserve(static_cast<std::size_t>(g.rank()));
    for (int i = 0; i < g.p; ++i) {
      for (int j = 0; j < g.n; ++j) im.push_back(FreeWord{FreeLetter(i, j)});
    }
    return EndoF(g, std::move(im));
  }

  const GroupParams& params() const { return params_; }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image(int orbit, int strand) const {
    return images_[static_cast<std::size_t>(params_.index(orbit, strand))];
  }

 private:
  GroupParams params_;
  std::vector<FreeWord> images_;
};

/// Substitutes each letter of `w` by its image and reduces.
inline FreeWord apply(const EndoF& e, const FreeWord& w) {
  const GroupParams& g = e.params();
  check_range(w, g);
  std::vector<FreeWord> inv(static_cast<std::size_t>(g.rank()));
  std::vector<bool> have_inv(inv.size(), false);
  std::vector<FreeLetter> out;
  for (const auto& l : w.letters) {
    const auto idx = static_cast<std::size_t>(g.index(l.orbit, l.strand));
    if (l.sign > 0) {
      for (const auto& m : e.images()[idx].letters) push_reduced(out, m);
    } else {
      if (!have_inv[idx]) {
        inv[idx] = inverse(e.images()[idx]);
        have_inv[idx] = true;
      }
      for (const auto& m : inv[idx].letters) push_reduced(out, m);
    }
  }
  return FreeWord(std::move(out));
}

/// `first` then `second`: x ↦ apply(second, first(x)).
inline EndoF compose(const EndoF& first, const EndoF& second) {
  require_same(first.params(), second.params());
  std::vector<FreeWord> im;
  im.reserve(first.images().size());
  for (const auto& w : first.images()) im.push_back(apply(second, w));
  return EndoF(first.params(), std::move(im));
}

/// Total reduced length of the generator images.
inline long length(const EndoF& e) {
  long total = 0;
  for (const auto& w : e.images()) total += static_cast<long>(w.size());
  return total;
}

inline bool eq_endo(const EndoF& a, const EndoF& b) {
  require_same(a.params(), b.params());
  return a.images() == b.images();
}

/// Image of a single generator, with closed forms for the inverses.
inline EndoF rho_gen(const BraidLetter& l, const GroupParams& g) {
  if (!l.in_range(g)) {
    throw IndexOutOfRange("generator b" + std::to_string(l.k) +
                          " outside range for n=" + std::to_string(g.n));
  }
  std::vector<FreeWord> im = EndoF::identity(g).images();
  auto at = [&](int i, int j) -> FreeWord& {
    return im[static_cast<std::size_t>(g.index(i, j))];
  };
  if (l.is_rot()) {
    // b:   x_{i0} ↦ x_{i+1,0},  x_{ij} ↦ x_{i0}⁻¹ x_{ij} x_{i0}
    // b⁻¹: x_{i0} ↦ x_{i-1,0},  x_{ij} ↦ x_{i-1,0} x_{ij} x_{i-1,0}⁻¹
    for (int i = 0; i < g.p; ++i) {
      const int next = mod(i + l.sign, g.p);
      at(i, 0) = FreeWord{FreeLetter(next, 0)};
      const FreeWord c = l.sign > 0 ? FreeWord{FreeLetter(i, 0, -1)}
                                    : FreeWord{FreeLetter(next, 0)};
      for (int j = 1; j < g.n; ++j) at(i, j) = conjugate(FreeWord{FreeLetter(i, j)}, c);
    }
  } else {
    const int k = l.k;
    for (int i = 0; i < g.p; ++i) {
      const FreeWord lo{FreeLetter(i, k)};
      const FreeWord hi{FreeLetter(i, k + 1)};
      if (l.sign > 0) {
        at(i, k) = hi;
        at(i, k + 1) = conjugate(lo, hi);
      } else {
        at(i, k + 1) = lo;
        at(i, k) = conjugate(hi, inverse(lo));
      }
    }
  }
  return EndoF(g, std::move(im));
}

inline EndoF rho_word(const BraidWord& w, const GroupParams& g) {
  check_range(w, g);
  EndoF acc = EndoF::identity(g);
  for (const auto& l : w) acc = compose(acc, rho_gen(l, g));
  return acc;
}

/// ρ_F(b^{pm}): x_{i0} fixed, x_{ij} ↦ Δ_i^{-m} x_{ij} Δ_i^{m}.
inline EndoF twist(const GroupParams& g, int m) {
  std::vector<FreeWord> im = EndoF::identity(g).images();
  for (int i = 0; i < g.p; ++i) {
    const FreeWord d = power(delta_word(g, i), -m);
    for (int j = 1; j < g.n; ++j) {
      im[static_cast<std::size_t>(g.index(i, j))] =
          conjugate(FreeWord{FreeLetter(i, j)}, d);
    }
  }
  return EndoF(g, std::move(im));
}

/// Orbit rotation c^k: x_{ij} ↦ x_{i+k mod p, j}.
inline EndoF shift_c(const GroupParams& g, int k) {
  std::vector<FreeWord> im;
  im.reserve(static_cast<std::size_t>(g.rank()));
  for (int i = 0; i < g.p; ++i) {
    for (int j = 0; j < g.n; ++j) {
      im.push_back(FreeWord{FreeLetter(mod(i + k, g.p), j)});
    }
  }
  return EndoF(g, std::move(im));
}

}  // namespace orbit_braid
