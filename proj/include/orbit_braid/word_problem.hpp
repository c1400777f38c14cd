#pragma once

// Equality of orbit braids. In the punctured plane equality is read off the
// faithful action on F_pn; in the plane the difference may additionally be a
// power of the central twist ρ_F(b^p).

#include <optional>

#include "orbit_braid/artin_rep.hpp"

namespace orbit_braid {

/// Total exponent of b in `w`.
inline int rot_exponent(const BraidWord& w) {
  int e = 0;
  for (const auto& l : w) {
    if (l.is_rot()) e += l.sign;
  }
  return e;
}

/// m with e == twist(m), if any.
inline std::optional<int> twist_power_of(const EndoF& e) {
  const GroupParams& g = e.params();
  if (g.n < 2) {
    return eq_endo(e, EndoF::identity(g)) ? std::optional<int>(0) : std::nullopt;
  }
  for (int i = 0; i < g.p; ++i) {
    const FreeWord& w = e.image(i, 0);
    if (w.size() != 1 || !(w[0] == FreeLetter(i, 0))) return std::nullopt;
  }
  // Δ_0^{-m} x_{01} Δ_0^{m} is reduced with length 2p|m| + 1.
  const FreeWord& probe = e.image(0, 1);
  if (probe.size() % 2 == 0) return std::nullopt;
  const std::size_t half = probe.size() / 2;
  if (half % static_cast<std::size_t>(g.p) != 0) return std::nullopt;
  int m = static_cast<int>(half / static_cast<std::size_t>(g.p));
  if (m != 0 && probe[0].sign > 0) m = -m;
  if (!eq_endo(e, twist(g, m))) return std::nullopt;
  return m;
}

/// Equality in the orbit braid group of the punctured plane.
/// With n = 1 the group is infinite cyclic on b and `allow_rank_one`
/// selects the exponent comparison.
inline bool eq_punctured(const BraidWord& w1, const BraidWord& w2,
                         const GroupParams& g, bool allow_rank_one = true) {
  check_range(w1, g);
  check_range(w2, g);
  if (g.n == 1) {
    if (!allow_rank_one) {
      throw UnsupportedRank("the representation is not faithful for n = 1");
    }
    return rot_exponent(w1) == rot_exponent(w2);
  }
  return eq_endo(rho_word(w1, g), rho_word(w2, g));
}

/// Equality in the orbit braid group of the plane: w1 and w2 differ by a
/// power of b^p on one side. ρ(b^p) is not central in Aut F_pn, so
/// w1 · w2⁻¹ and w2⁻¹ · w1 are both tried; either being a twist power is
/// enough. With n = 1 the group is ℤ_p on b.
inline bool eq_plane(const BraidWord& w1, const BraidWord& w2,
                     const GroupParams& g, bool allow_rank_one = true) {
  check_range(w1, g);
  check_range(w2, g);
  if (g.n == 1) {
    if (!allow_rank_one) {
      throw UnsupportedRank("the representation is not faithful for n = 1");
    }
    return mod(rot_exponent(w1) - rot_exponent(w2), g.p) == 0;
  }
  if (!(perm_image(w1, g) == perm_image(w2, g))) return false;
  const EndoF a = rho_word(w1, g);
  const EndoF b = rho_word(w2.inverse(), g);
  return twist_power_of(compose(a, b)).has_value() ||
         twist_power_of(compose(b, a)).has_value();
}

}  // namespace orbit_braid
