#pragma once

#include <string>

#include "orbit_braid/errors.hpp"

namespace orbit_braid {

/// Order p of the cyclic action and number n of orbit strands.
struct GroupParams {
  int p = 1;
  int n = 1;

  GroupParams() = default;
  GroupParams(int order, int strands) : p(order), n(strands) {
    if (p < 1 || n < 1) {
      throw IndexOutOfRange("group parameters need p >= 1 and n >= 1, got p=" +
                            std::to_string(p) + " n=" + std::to_string(n));
    }
  }

  /// Number of free generators x_{ij}.
  int rank() const { return p * n; }

  /// Flat index of x_{ij}; orbit-major.
  int index(int orbit, int strand) const { return orbit * n + strand; }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

inline void require_same(const GroupParams& a, const GroupParams& b) {
  if (!(a == b)) {
    throw ParamsMismatch("parameter mismatch: (p=" + std::to_string(a.p) +
                         ", n=" + std::to_string(a.n) + ") vs (p=" +
                         std::to_string(b.p) + ", n=" + std::to_string(b.n) +
                         ")");
  }
}

inline int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace orbit_braid
