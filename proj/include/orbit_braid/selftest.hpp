#pragma once

// Property checks over a (p, n) grid, one verdict line per property.

#include <cstdint>
#include <ostream>
#include <string>

#include "orbit_braid/artin_rep.hpp"
#include "orbit_braid/random_words.hpp"
#include "orbit_braid/recognition.hpp"
#include "orbit_braid/text_io.hpp"

namespace orbit_braid {

struct SelftestOptions {
  int p_min = 2, p_max = 4;
  int n_min = 2, n_max = 4;
  int samples = 40;
  int max_word_length = 12;
  std::uint64_t seed = 2024;
};

namespace detail {

inline const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace detail

/// Prints "p=.. n=.." then "<property> : <TOKEN>" lines per grid point.
/// TOKEN is PASS or FAIL for asserted properties and RECORDED-TRUE or
/// RECORDED-FALSE for the odd-p relation, which never fails the run.
/// Returns true iff every asserted property passed.
inline bool run_selftest(const SelftestOptions& opt, std::ostream& out) {
  bool all = true;
  for (int p = opt.p_min; p <= opt.p_max; ++p) {
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
      const GroupParams g(p, n);
      Rng rng(opt.seed + static_cast<std::uint64_t>(100 * p + n));
      out << "p=" << p << " n=" << n << '\n';
      auto report = [&](const std::string& name, bool ok) {
        out << name << " : " << detail::verdict(ok) << '\n';
        all = all && ok;
      };

      const EndoF id = EndoF::identity(g);
      const auto rels = relators(g);
      if (!rels.empty()) {
        bool ok = true;
        for (const auto& r : rels) ok = ok && eq_endo(rho_word(r, g), id);
        report("relations", ok);
      }

      report("b^p == twist(1)", eq_endo(rho_word(power(BraidWord{BraidLetter::rot()}, p), g),
                                        twist(g, 1)));

      if (n >= 2) {
        const BraidWord bb0{BraidLetter::rot(), BraidLetter::swap(0)};
        const BraidWord b0b{BraidLetter::swap(0), BraidLetter::rot()};
        const bool eq = eq_endo(rho_word(power(bb0, p), g), rho_word(power(b0b, p), g));
        if (p % 2 == 0) {
          report("(bb0)^p == (b0b)^p", eq);
        } else {
          out << "(bb0)^p == (b0b)^p : " << (eq ? "RECORDED-TRUE" : "RECORDED-FALSE") << '\n';
        }
      }

      bool conditions = true;
      bool round_trip = true;
      for (int s = 0; s < opt.samples; ++s) {
        const BraidWord w = random_word(rng, g, opt.max_word_length);
        const EndoF e = rho_word(w, g);
        try {
          check_conditions(e);
        } catch (const Error&) {
          conditions = false;
        }
        try {
          const Decomposition d = decompose(e, g);
          round_trip = round_trip && eq_endo(compose(rho_word(d.word, g), twist(g, d.twist)), e);
        } catch (const Error&) {
          round_trip = false;
        }
      }
      report("conditions", conditions);
      report("decompose round trip", round_trip);
    }
  }
  out << (all ? "selftest: PASS" : "selftest: FAIL") << '\n';
  return all;
}

}  // namespace orbit_braid
