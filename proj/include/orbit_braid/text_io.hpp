#pragma once

// Text grammars:
//   free word   x<i>.<j>[^<k>]            e.g. "x0.1 x0.0^-1"
//   braid word  b[^<k>] | b<k>[^<k>]      e.g. "b b0^-1"
//   A-word      A<i>[^<k>] | A<i>.<q>.<j>[^<k>]
//   endomorphism file: one "x<i>.<j> -> <free word>" per line, '#' comments.
//   combed form: one "L<level>: <A-word or ->" per line.

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "orbit_braid/artin_rep.hpp"
#include "orbit_braid/braid_word.hpp"
#include "orbit_braid/free_word.hpp"

namespace orbit_braid {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  auto space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (k < s.size()) {
    while (k < s.size() && space(s[k])) ++k;
    const std::size_t start = k;
    while (k < s.size() && !space(s[k])) ++k;
    if (k > start) out.push_back(s.substr(start, k - start));
  }
  return out;
}

inline int parse_int(std::string_view s, std::string_view token, bool allow_sign) {
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
    throw ParseError("bad index in token '" + std::string(token) + "'");
  }
  if (!s.empty() && s[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("bad number in token '" + std::string(token) + "'");
  }
  return value;
}

/// Splits "<head>^<exp>" and returns the exponent (1 when absent).
inline int split_exponent(std::string_view token, std::string_view& head) {
  const auto caret = token.find('^');
  if (caret == std::string_view::npos) {
    head = token;
    return 1;
  }
  head = token.substr(0, caret);
  return parse_int(token.substr(caret + 1), token, true);
}

/// Parses dot-separated non-negative indices.
inline std::vector<int> parse_indices(std::string_view s, std::string_view token) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const auto dot = s.find('.', start);
    out.push_back(parse_int(s.substr(start, dot - start), token, false));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

}  // namespace detail

inline FreeWord parse_free_word(std::string_view text, const GroupParams& g) {
  std::vector<FreeLetter> letters;
  for (auto token : detail::split_ws(text)) {
    std::string_view head;
    const int e = detail::split_exponent(token, head);
    if (head.size() < 2 || head[0] != 'x') {
      throw ParseError("expected x<i>.<j>, got '" + std::string(token) + "'");
    }
    const auto idx = detail::parse_indices(head.substr(1), token);
    if (idx.size() != 2) {
      throw ParseError("expected x<i>.<j>, got '" + std::string(token) + "'");
    }
    const FreeLetter l(idx[0], idx[1], e < 0 ? -1 : 1);
    if (idx[0] >= g.p || idx[1] >= g.n) {
      throw IndexOutOfRange("'" + std::string(token) + "' outside p=" +
                            std::to_string(g.p) + " n=" + std::to_string(g.n));
    }
    for (int t = 0; t < (e < 0 ? -e : e); ++t) letters.push_back(l);
  }
  return reduce(FreeWord(std::move(letters)));
}

inline std::string format_letter(const FreeLetter& l) {
  std::string s = "x" + std::to_string(l.orbit) + "." + std::to_string(l.strand);
  if (l.sign < 0) s += "^-1";
  return s;
}

inline std::string format(const FreeWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += format_letter(l);
  }
  return out;
}

inline BraidWord parse_braid(std::string_view text, const GroupParams& g) {
  BraidWord w;
  for (auto token : detail::split_ws(text)) {
    std::string_view head;
    const int e = detail::split_exponent(token, head);
    if (head.empty() || head[0] != 'b') {
      throw ParseError("expected b or b<k>, got '" + std::string(token) + "'");
    }
    BraidLetter l = BraidLetter::rot();
    if (head.size() > 1) {
      l = BraidLetter::swap(detail::parse_int(head.substr(1), token, false));
      if (!l.in_range(g)) {
        throw IndexOutOfRange("'" + std::string(token) + "' needs k <= n-2 = " +
                              std::to_string(g.n - 2));
      }
    }
    if (e < 0) l = l.inverse();
    for (int t = 0; t < (e < 0 ? -e : e); ++t) w.push_back(l);
  }
  return w;
}

inline std::string format_letter(const BraidLetter& l) {
  std::string s = l.is_rot() ? "b" : "b" + std::to_string(l.k);
  if (l.sign < 0) s += "^-1";
  return s;
}

inline std::string format(const BraidWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += format_letter(l);
  }
  return out;
}

inline AWord parse_a_word(std::string_view text, const GroupParams& g) {
  AWord out;
  for (auto token : detail::split_ws(text)) {
    std::string_view head;
    const int e = detail::split_exponent(token, head);
    if (head.size() < 2 || head[0] != 'A') {
      throw ParseError("expected A<i> or A<i>.<q>.<j>, got '" +
                       std::string(token) + "'");
    }
    const auto idx = detail::parse_indices(head.substr(1), token);
    ALetter a;
    if (idx.size() == 1) {
      a = ALetter::single(idx[0]);
    } else if (idx.size() == 3) {
      a = ALetter::triple(idx[0], idx[1], idx[2]);
    } else {
      throw ParseError("expected A<i> or A<i>.<q>.<j>, got '" +
                       std::string(token) + "'");
    }
    if (!a.in_range(g)) {
      throw IndexOutOfRange("'" + std::string(token) + "' outside p=" +
                            std::to_string(g.p) + " n=" + std::to_string(g.n));
    }
    if (e < 0) a = a.inverse();
    for (int t = 0; t < (e < 0 ? -e : e); ++t) out.push_back(a);
  }
  return reduce(out);
}

inline std::string format_letter(const ALetter& a) {
  std::string s = "A" + std::to_string(a.i);
  if (a.three) s += "." + std::to_string(a.q) + "." + std::to_string(a.j);
  if (a.sign < 0) s += "^-1";
  return s;
}

inline std::string format(const AWord& w) {
  std::string out;
  for (const auto& a : w) {
    if (!out.empty()) out += ' ';
    out += format_letter(a);
  }
  return out;
}

/// pn lines "x<i>.<j> -> <image>", i ascending then j ascending.
inline std::string format_endo(const EndoF& e) {
  std::string out;
  const GroupParams& g = e.params();
  for (int i = 0; i < g.p; ++i) {
    for (int j = 0; j < g.n; ++j) {
      out += format_letter(FreeLetter(i, j)) + " ->";
      const FreeWord& w = e.image(i, j);
      if (!w.empty()) out += " " + format(w);
      out += '\n';
    }
  }
  return out;
}

inline EndoF parse_endo(std::istream& in, const GroupParams& g) {
  std::vector<FreeWord> images(static_cast<std::size_t>(g.rank()));
  std::vector<bool> seen(images.size(), false);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (detail::split_ws(line).empty()) continue;
    const auto arrow = line.find("->");
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (arrow == std::string::npos) throw ParseError(where + "missing '->'");
    const auto lhs = detail::split_ws(std::string_view(line).substr(0, arrow));
    if (lhs.size() != 1) throw ParseError(where + "expected one generator before '->'");
    const FreeWord gen = parse_free_word(lhs[0], g);
    if (gen.size() != 1 || gen[0].sign < 0) {
      throw ParseError(where + "left side must be a single generator x<i>.<j>");
    }
    const auto idx = static_cast<std::size_t>(g.index(gen[0].orbit, gen[0].strand));
    if (seen[idx]) throw ParseError(where + "generator bound twice");
    seen[idx] = true;
    images[idx] = parse_free_word(std::string_view(line).substr(arrow + 2), g);
  }
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (!seen[k]) {
      throw ParseError("no binding for x" + std::to_string(k / static_cast<std::size_t>(g.n)) +
                       "." + std::to_string(k % static_cast<std::size_t>(g.n)));
    }
  }
  return EndoF(g, std::move(images));
}

inline EndoF parse_endo(std::string_view text, const GroupParams& g) {
  std::istringstream in{std::string(text)};
  return parse_endo(in, g);
}

}  // namespace orbit_braid
