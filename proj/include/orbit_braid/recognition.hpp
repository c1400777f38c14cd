#pragma once

// Recognising braid automorphisms among endomorphisms of F_pn and writing
// them back as braid words by greedy reduction of the total image length.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbit_braid/artin_rep.hpp"
#include "orbit_braid/word_problem.hpp"

namespace orbit_braid {

/// Every image written as A_{ij} x_{μ(i,j)} A_{ij}⁻¹ with μ a permutation.
struct ConjugateForm {
  GroupParams params;
  std::vector<FreeWord> conjugators;  // indexed like EndoF images
  std::vector<int> mu;                // flat generator index
  std::optional<FreeWord> boundary_conjugator;

  const FreeWord& conjugator(int i, int j) const {
    return conjugators[static_cast<std::size_t>(params.index(i, j))];
  }
  int target(int i, int j) const {
    return mu[static_cast<std::size_t>(params.index(i, j))];
  }
};

inline ConjugateForm parse_conjugate_form(const EndoF& e) {
  const GroupParams& g = e.params();
  ConjugateForm f;
  f.params = g;
  std::vector<bool> hit(static_cast<std::size_t>(g.rank()), false);
  for (int i = 0; i < g.p; ++i) {
    for (int j = 0; j < g.n; ++j) {
      const FreeWord& w = e.image(i, j);
      const std::string where =
          "image of x" + std::to_string(i) + "." + std::to_string(j);
      if (w.size() % 2 == 0) {
        throw NotConjugateForm(where + " has even length " +
                               std::to_string(w.size()));
      }
      const std::size_t half = w.size() / 2;
      for (std::size_t k = 0; k < half; ++k) {
        if (!(w[k] == w[w.size() - 1 - k].inverse())) {
          throw NotConjugateForm(where + " is not a conjugate of a letter");
        }
      }
      const FreeLetter mid = w[half];
      if (mid.sign < 0) {
        throw NotConjugateForm(where + " conjugates an inverse letter");
      }
      f.conjugators.emplace_back(std::vector<FreeLetter>(
          w.letters.begin(), w.letters.begin() + static_cast<long>(half)));
      const int target = g.index(mid.orbit, mid.strand);
      if (hit[static_cast<std::size_t>(target)]) {
        throw NotPermutation("x" + std::to_string(mid.orbit) + "." +
                             std::to_string(mid.strand) +
                             " is the target of two generators");
      }
      hit[static_cast<std::size_t>(target)] = true;
      f.mu.push_back(target);
    }
  }
  return f;
}

/// Compatibility with the orbit rotation c: c(A_{ij}) = A_{i+1,j} and
/// c(x_{μ(i,j)}) = x_{μ(i+1,j)}.
inline bool check_equivariance(const ConjugateForm& f, const GroupParams& g) {
  require_same(f.params, g);
  for (int i = 0; i < g.p; ++i) {
    const int next = mod(i + 1, g.p);
    for (int j = 0; j < g.n; ++j) {
      if (!(shift_orbits(f.conjugator(i, j), 1, g) == f.conjugator(next, j))) {
        return false;
      }
      const int t = f.target(i, j);
      const int shifted = g.index(mod(t / g.n + 1, g.p), t % g.n);
      if (f.target(next, j) != shifted) return false;
    }
  }
  return true;
}

/// A with e(∂) = A ∂ A⁻¹, if the boundary loop goes to a conjugate of itself.
inline std::optional<FreeWord> check_boundary(const EndoF& e) {
  const FreeWord d = boundary_word(e.params());
  return cyclic_conjugator(apply(e, d), d);
}

/// Generators in trial order: b0, b0⁻¹, ..., b_{n-2}⁻¹, b, b⁻¹.
inline std::vector<BraidLetter> trial_order(const GroupParams& g) {
  std::vector<BraidLetter> out;
  for (int k = 0; k + 1 < g.n; ++k) {
    out.push_back(BraidLetter::swap(k, 1));
    out.push_back(BraidLetter::swap(k, -1));
  }
  out.push_back(BraidLetter::rot(1));
  out.push_back(BraidLetter::rot(-1));
  return out;
}

/// Ω^r: the letter permutation advancing every letter of ∂ by r places
/// cyclically. It sends ∂ to a conjugate of itself and Ω^n is the orbit
/// shift c.
inline EndoF boundary_rotation(const GroupParams& g, int r) {
  const FreeWord d = boundary_word(g);
  const int len = g.rank();
  std::vector<FreeWord> im(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k) {
    const FreeLetter& y = d[static_cast<std::size_t>(k)];
    im[static_cast<std::size_t>(g.index(y.orbit, y.strand))] =
        FreeWord{d[static_cast<std::size_t>(mod(k + r, len))]};
  }
  return EndoF(g, std::move(im));
}

/// δ = b b_0 b_1 ⋯ b_{n-2}, whose image is boundary_rotation(g, 1).
inline BraidWord boundary_rotation_braid(const GroupParams& g) {
  BraidWord d{BraidLetter::rot()};
  for (int k = 0; k + 1 < g.n; ++k) d.push_back(BraidLetter::swap(k));
  return d;
}

/// r with e == Ω^r, if e is such a rotation.
inline std::optional<int> boundary_rotation_of(const EndoF& e) {
  const GroupParams& g = e.params();
  if (length(e) != g.rank()) return std::nullopt;
  const FreeWord d = boundary_word(g);
  const FreeWord& im = e.image(d[0].orbit, d[0].strand);
  if (im[0].sign < 0) return std::nullopt;
  for (int r = 0; r < g.rank(); ++r) {
    if (d[static_cast<std::size_t>(r)] == im[0]) {
      if (eq_endo(e, boundary_rotation(g, r))) return r;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

/// One greedy move: e ↦ e ∘ Ω^rotation ∘ ρ(letter), i.e. the braid
/// letter · δ^rotation acts before e.
struct ReduceStep {
  int rotation = 0;
  BraidLetter letter;
  EndoF result;
};

/// Throws PreconditionViolated unless `e` has conjugate form, sends the
/// boundary loop to a conjugate, and commutes with the orbit rotation.
inline ConjugateForm check_conditions(const EndoF& e) {
  ConjugateForm f;
  try {
    f = parse_conjugate_form(e);
  } catch (const Error& err) {
    throw PreconditionViolated(std::string("condition (1) fails: ") + err.what());
  }
  f.boundary_conjugator = check_boundary(e);
  if (!f.boundary_conjugator) {
    throw PreconditionViolated("condition (2) fails: boundary loop not conjugate");
  }
  if (!check_equivariance(f, e.params())) {
    throw PreconditionViolated("condition (3) fails: not orbit-equivariant");
  }
  return f;
}

namespace detail {

inline std::optional<ReduceStep> reduce_step_unchecked(const EndoF& e) {
  const GroupParams& g = e.params();
  const long current = length(e);
  const auto letters = trial_order(g);
  for (int r = 0; r < g.rank(); ++r) {
    const EndoF base = r == 0 ? e : compose(boundary_rotation(g, r), e);
    for (const auto& letter : letters) {
      EndoF next = compose(rho_gen(letter, g), base);
      if (length(next) < current) return ReduceStep{r, letter, std::move(next)};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// First move (rotations ascending, then generators in trial order) that
/// strictly shortens `e`.
inline std::optional<ReduceStep> reduce_step(const EndoF& e) {
  check_conditions(e);
  return detail::reduce_step_unchecked(e);
}

struct Decomposition {
  BraidWord word;
  int twist = 0;
  std::vector<long> lengths;  // l before the first move and after each move
};

inline std::string describe_permutation(const EndoF& e) {
  std::string out;
  const GroupParams& g = e.params();
  for (int i = 0; i < g.p; ++i) {
    for (int j = 0; j < g.n; ++j) {
      const FreeWord& w = e.image(i, j);
      if (w.size() == 1 && w[0] == FreeLetter(i, j)) continue;
      if (!out.empty()) out += ", ";
      out += "x" + std::to_string(i) + "." + std::to_string(j) + " -> ";
      if (w.size() == 1) {
        out += "x" + std::to_string(w[0].orbit) + "." + std::to_string(w[0].strand);
        if (w[0].sign < 0) out += "^-1";
      } else {
        out += "(length " + std::to_string(w.size()) + ")";
      }
    }
  }
  return out;
}

/// Writes `e` as compose(rho_word(word), twist(m)) by greedy length
/// reduction. Terminal letter permutations that rotate ∂ are absorbed as
/// powers of δ; any other terminal permutation is NotRealizable.
inline Decomposition decompose(const EndoF& e, const GroupParams& g) {
  require_same(e.params(), g);
  check_conditions(e);
  const long floor_len = g.rank();

  Decomposition d;
  EndoF cur = e;
  BraidWord prefix;  // cur == ρ(prefix · w)
  BraidWord tail;    // prefix · w == tail in the group
  d.lengths.push_back(length(cur));
  while (true) {
    if (auto m = twist_power_of(cur)) {
      d.twist = *m;
      break;
    }
    if (length(cur) == floor_len) {
      if (auto r = boundary_rotation_of(cur)) {
        tail = power(boundary_rotation_braid(g), *r);
        break;
      }
      throw NotRealizable("greedy reduction ends at a letter permutation that "
                          "does not rotate the boundary word: " +
                          describe_permutation(cur));
    }
    auto step = detail::reduce_step_unchecked(cur);
    if (!step) {
      throw Stuck("no move shortens the endomorphism at length " +
                  std::to_string(length(cur)) + ": " + describe_permutation(cur));
    }
    BraidWord move{step->letter};
    prefix = move * power(boundary_rotation_braid(g), step->rotation) * prefix;
    cur = std::move(step->result);
    d.lengths.push_back(length(cur));
  }
  d.word = prefix.inverse() * tail;
  return d;
}

}  // namespace orbit_braid
