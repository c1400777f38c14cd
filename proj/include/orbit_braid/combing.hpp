#pragma once

// Combing of pure orbit braids in the punctured plane.
//
// Forgetting strand 0 (ε) splits P_n → P_{n-1} with kernel U_n, free on
// {A_0} ∪ {A_{0qj}}. Iterating gives a = a_1 a_2 ⋯ a_n where level L holds a
// word in the basis {A_{n-L}} ∪ {A_{n-L,q,j} : j > n-L}; strand labels are
// the original ones throughout.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <queue>
#include <tuple>
#include <string>
#include <unordered_map>
#include <vector>

#include "orbit_braid/artin_rep.hpp"
#include "orbit_braid/braid_word.hpp"
#include "orbit_braid/text_io.hpp"
#include "orbit_braid/word_problem.hpp"

namespace orbit_braid {

inline constexpr int kDefaultMaxBasisLength = 8;
inline constexpr long kDefaultMaxExpansions = 5000;

/// Free basis of level L: A_{n-L} and A_{n-L,q,j}, n-L < j ≤ n-1.
inline std::vector<ALetter> level_basis(const GroupParams& g, int level) {
  if (level < 1 || level > g.n) {
    throw IndexOutOfRange("level " + std::to_string(level) + " outside [1," +
                          std::to_string(g.n) + "]");
  }
  const int i = g.n - level;
  std::vector<ALetter> out{ALetter::single(i)};
  for (int j = i + 1; j < g.n; ++j) {
    for (int q = 0; q < g.p; ++q) out.push_back(ALetter::triple(i, q, j));
  }
  return out;
}

struct UWord {
  int level = 1;
  AWord letters;

  friend bool operator==(const UWord&, const UWord&) = default;
};

struct CombedForm {
  GroupParams params;
  std::vector<UWord> coords;  // coords[L-1] is level L

  friend bool operator==(const CombedForm&, const CombedForm&) = default;
};

/// Shifts every strand index of an A-word by `by`.
inline AWord relabel(const AWord& w, int by) {
  AWord out = w;
  for (auto& a : out) {
    a.i += by;
    if (a.three) a.j += by;
  }
  return out;
}

/// The section of ε: an A-word on (p, n-1) read as a braid on (p, n) with a
/// new strand 0 that stays put.
inline BraidWord include_lift(const AWord& w, const GroupParams& lower) {
  for (const auto& a : w) {
    if (!a.in_range(lower)) {
      throw NotInSectionDomain("A-letter " + format_letter(a) +
                               " is not a generator on n=" +
                               std::to_string(lower.n));
    }
  }
  return expand_A(relabel(w, 1), GroupParams(lower.p, lower.n + 1));
}

inline BraidWord multiply_back(const CombedForm& c, const GroupParams& g) {
  require_same(c.params, g);
  BraidWord out;
  for (const auto& level : c.coords) out = out * expand_A(level.letters, g);
  return out;
}

namespace detail {

inline std::uint64_t hash_images(const EndoF& e) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& w : e.images()) {
    for (const auto& l : w.letters) {
      const std::uint64_t code = (static_cast<std::uint64_t>(l.orbit) << 17) ^
                                 (static_cast<std::uint64_t>(l.strand) << 2) ^
                                 (l.sign > 0 ? 1u : 2u);
      h = (h ^ code) * 1099511628211ull;
    }
    h = (h ^ 0xffu) * 1099511628211ull;  // image separator
  }
  return h;
}

}  // namespace detail

/// Writes a braid in ker ε as the unique reduced word over the top-level
/// basis {A_0, A_{0qj}}.
///
/// Best-first search: a state is ρ(κ · u⁻¹) for a basis word u, expanded
/// in order of total image length, and the search stops when a state is
/// exactly the identity. Words longer than `max_basis_length` are never
/// explored, states longer than 4 l_0 + 4pn are dropped (solution paths stay
/// well under 3 l_0 in practice), and `max_expansions` bounds the work.
/// Running out raises SearchBudgetExceeded; an answer is always exact.
inline AWord express_in_basis(const BraidWord& w, const GroupParams& g,
                              int max_basis_length = kDefaultMaxBasisLength,
                              long max_expansions = kDefaultMaxExpansions) {
  if (!is_pure(w, g)) throw NotPure("express_in_basis needs a pure braid");
  if (g.n == 1) {
    const int e = rot_exponent(w);
    AWord out(static_cast<std::size_t>(std::abs(e) / g.p),
              ALetter::single(0, e < 0 ? -1 : 1));
    if (static_cast<int>(out.size()) > max_basis_length) {
      throw SearchBudgetExceeded("A0 power " + std::to_string(out.size()) +
                                 " exceeds basis length " +
                                 std::to_string(max_basis_length));
    }
    return out;
  }
  const GroupParams lower(g.p, g.n - 1);
  if (!eq_punctured(forget_strand0(w, g), BraidWord{}, lower)) {
    throw NotInKernel("braid does not become trivial after forgetting strand 0");
  }

  std::vector<ALetter> alphabet;
  for (const auto& a : level_basis(g, g.n)) {
    alphabet.push_back(a);
    alphabet.push_back(a.inverse());
  }
  std::vector<EndoF> peel;  // ρ(a⁻¹) for each alphabet letter a
  peel.reserve(alphabet.size());
  for (const auto& a : alphabet) peel.push_back(rho_word(expand_A(a.inverse(), g), g));

  struct State {
    EndoF e;
    int parent;
    int letter;
    int depth;
  };
  std::vector<State> states;
  std::unordered_map<std::uint64_t, std::vector<int>> seen;
  using Entry = std::tuple<long, int, int>;  // length, depth, state
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

  long cap = 0;
  auto visit = [&](EndoF e, int parent, int letter, int depth) {
    if (parent >= 0 && length(e) > cap) return;
    auto& bucket = seen[detail::hash_images(e)];
    for (int id : bucket) {
      State& s = states[static_cast<std::size_t>(id)];
      if (!eq_endo(s.e, e)) continue;
      if (depth < s.depth) {  // reached more cheaply: requeue
        s.parent = parent;
        s.letter = letter;
        s.depth = depth;
        queue.emplace(length(s.e), depth, id);
      }
      return;
    }
    const long len = length(e);
    const int id = static_cast<int>(states.size());
    states.push_back({std::move(e), parent, letter, depth});
    bucket.push_back(id);
    queue.emplace(len, depth, id);
  };

  const EndoF identity = EndoF::identity(g);
  EndoF start = rho_word(w, g);
  cap = 4 * length(start) + 4L * g.rank();
  visit(std::move(start), -1, -1, 0);
  long expansions = 0;
  while (!queue.empty()) {
    const auto [len, depth, id] = queue.top();
    queue.pop();
    if (depth != states[static_cast<std::size_t>(id)].depth) continue;  // stale
    if (len == g.rank() && eq_endo(states[static_cast<std::size_t>(id)].e, identity)) {
      // κ u⁻¹ = e with u = a_1 ⋯ a_k peeled in order, so κ = a_k ⋯ a_1.
      AWord out;
      for (int s = id; states[static_cast<std::size_t>(s)].parent >= 0;
           s = states[static_cast<std::size_t>(s)].parent) {
        out.push_back(alphabet[static_cast<std::size_t>(states[static_cast<std::size_t>(s)].letter)]);
      }
      return reduce(out);
    }
    if (depth >= max_basis_length) continue;
    if (++expansions > max_expansions) {
      throw SearchBudgetExceeded("search gave up after " + std::to_string(max_expansions) +
                                 " expansions");
    }
    for (std::size_t k = 0; k < alphabet.size(); ++k) {
      visit(compose(states[static_cast<std::size_t>(id)].e, peel[k]), id,
            static_cast<int>(k), depth + 1);
    }
  }
  throw SearchBudgetExceeded("no basis word of length <= " +
                             std::to_string(max_basis_length) +
                             " represents the kernel element");
}

inline CombedForm comb(const BraidWord& w, const GroupParams& g,
                       int max_basis_length = kDefaultMaxBasisLength);

/// κ = ι(ε(w))⁻¹ · w, an element of ker ε.
inline BraidWord kernel_coordinate(const BraidWord& w, const GroupParams& g,
                                   int max_basis_length = kDefaultMaxBasisLength) {
  if (!is_pure(w, g)) throw NotPure("kernel_coordinate needs a pure braid");
  if (g.n == 1) throw Underflow("no strand to forget when n = 1");
  const GroupParams lower(g.p, g.n - 1);
  const CombedForm below = comb(forget_strand0(w, g), lower, max_basis_length);
  AWord flat;
  for (const auto& level : below.coords) {
    flat.insert(flat.end(), level.letters.begin(), level.letters.end());
  }
  return include_lift(flat, lower).inverse() * w;
}

inline CombedForm comb(const BraidWord& w, const GroupParams& g,
                       int max_basis_length) {
  if (!is_pure(w, g)) throw NotPure("comb needs a pure braid");
  CombedForm out;
  out.params = g;
  if (g.n == 1) {
    out.coords.push_back({1, express_in_basis(w, g, max_basis_length)});
    return out;
  }
  const GroupParams lower(g.p, g.n - 1);
  const CombedForm below = comb(forget_strand0(w, g), lower, max_basis_length);
  AWord flat;
  for (const auto& level : below.coords) {
    out.coords.push_back({level.level, relabel(level.letters, 1)});
    flat.insert(flat.end(), level.letters.begin(), level.letters.end());
  }
  const BraidWord kappa = include_lift(flat, lower).inverse() * w;
  out.coords.push_back({g.n, express_in_basis(kappa, g, max_basis_length)});
  return out;
}

/// "L<level>: <A-word or ->" per level, ascending.
inline std::string format(const CombedForm& c) {
  std::string out;
  for (const auto& level : c.coords) {
    out += "L" + std::to_string(level.level) + ": ";
    out += level.letters.empty() ? std::string("-") : format(level.letters);
    out += '\n';
  }
  return out;
}

}  // namespace orbit_braid
