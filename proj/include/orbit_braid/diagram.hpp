#pragma once

// Flattened side view of an orbit braid as SVG.
//
// Columns are grouped by orbit copy: copy i of strand j sits in column
// i*n + j, to the right of a vertical axis line standing for the origin.
// Each letter takes one row. b_k crosses columns k and k+1 in every copy;
// b moves the strand-0 copies one sector round (copy p-1 wraps back to 0).
// Every strand is a single <path>; crossings add a short over-stroke.

#include <array>
#include <string>
#include <vector>

#include "orbit_braid/braid_word.hpp"
#include "orbit_braid/errors.hpp"

namespace orbit_braid {

struct RenderStyle {
  int width = 480;
  int height = 360;
  int crossing_gap = 8;
  // Dash pattern for orbit copy i is dashes[i % size]; "" draws solid.
  std::vector<std::string> dashes{"", "8 4", "2 3", "10 3 2 3"};

  void validate() const {
    if (width <= 0 || height <= 0) {
      throw PreconditionViolated("render style needs positive width and height");
    }
    if (crossing_gap < 0) throw PreconditionViolated("crossing gap must be >= 0");
    if (dashes.empty()) throw PreconditionViolated("need at least one dash pattern");
  }
};

namespace detail {

inline constexpr std::array<const char*, 8> kStrandPalette{
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

struct Point {
  int x;
  int y;
};

inline std::string pt(int x, int y) {
  return std::to_string(x) + " " + std::to_string(y);
}

}  // namespace detail

inline std::string render(const BraidWord& w, const GroupParams& g,
                          const RenderStyle& style = {}) {
  style.validate();
  check_range(w, g);
  const int cols = g.rank();
  const int rows = std::max<int>(1, static_cast<int>(w.size()));
  const int margin = 20;
  const int axis_x = margin;
  const int dx = std::max(1, (style.width - 2 * margin) / (cols + 1));
  const int dy = std::max(1, (style.height - 2 * margin) / rows);
  auto col_x = [&](int c) { return axis_x + dx * (c + 1); };
  auto row_y = [&](int r) { return margin + dy * r; };

  // column of each strand (flat index i*n+j), and the inverse map
  std::vector<int> at(static_cast<std::size_t>(cols));
  std::vector<int> who(static_cast<std::size_t>(cols));
  for (int c = 0; c < cols; ++c) at[static_cast<std::size_t>(c)] = who[static_cast<std::size_t>(c)] = c;

  std::vector<std::string> d(static_cast<std::size_t>(cols));
  for (int s = 0; s < cols; ++s) d[static_cast<std::size_t>(s)] = "M " + detail::pt(col_x(s), row_y(0));

  std::string marks;
  int r = 0;
  for (const auto& l : w) {
    const int y0 = row_y(r);
    const int y1 = row_y(r + 1);
    const int ym = (y0 + y1) / 2;
    std::vector<int> next_who = who;
    if (l.is_rot()) {
      for (int i = 0; i < g.p; ++i) {
        const int from = g.index(i, 0);
        const int to = g.index(mod(i + l.sign, g.p), 0);
        next_who[static_cast<std::size_t>(to)] = who[static_cast<std::size_t>(from)];
      }
    } else {
      for (int i = 0; i < g.p; ++i) {
        const int a = g.index(i, l.k);
        const int b = a + 1;
        std::swap(next_who[static_cast<std::size_t>(a)], next_who[static_cast<std::size_t>(b)]);
        // Positive b_k: the strand leaving the left column passes over.
        const int over_from = l.sign > 0 ? a : b;
        const int over_to = l.sign > 0 ? b : a;
        const int s = who[static_cast<std::size_t>(over_from)];
        const int hx = (col_x(a) + col_x(b)) / 2;
        const int half = style.crossing_gap;
        const int sx = col_x(over_to) > col_x(over_from) ? 1 : -1;
        const std::string color = detail::kStrandPalette[static_cast<std::size_t>(s % g.n) % detail::kStrandPalette.size()];
        marks += "  <line class=\"gap\" x1=\"" + std::to_string(hx - sx * half) + "\" y1=\"" +
                 std::to_string(ym - half) + "\" x2=\"" + std::to_string(hx + sx * half) +
                 "\" y2=\"" + std::to_string(ym + half) +
                 "\" stroke=\"white\" stroke-width=\"" + std::to_string(2 + half / 2) + "\"/>\n";
        marks += "  <line class=\"over\" x1=\"" + std::to_string(hx - sx * half) + "\" y1=\"" +
                 std::to_string(ym - half) + "\" x2=\"" + std::to_string(hx + sx * half) +
                 "\" y2=\"" + std::to_string(ym + half) + "\" stroke=\"" + color +
                 "\" stroke-width=\"2\"/>\n";
      }
    }
    for (int c = 0; c < cols; ++c) {
      const int s = next_who[static_cast<std::size_t>(c)];
      const int from = at[static_cast<std::size_t>(s)];
      auto& path = d[static_cast<std::size_t>(s)];
      if (from == c) {
        path += " L " + detail::pt(col_x(c), y1);
      } else {
        path += " C " + detail::pt(col_x(from), ym) + " " + detail::pt(col_x(c), ym) + " " +
                detail::pt(col_x(c), y1);
      }
    }
    who = next_who;
    for (int c = 0; c < cols; ++c) at[static_cast<std::size_t>(who[static_cast<std::size_t>(c)])] = c;
    ++r;
  }
  if (w.empty()) {
    for (int s = 0; s < cols; ++s) d[static_cast<std::size_t>(s)] += " L " + detail::pt(col_x(s), row_y(1));
  }

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(style.width) + "\" height=\"" + std::to_string(style.height) +
         "\" viewBox=\"0 0 " + std::to_string(style.width) + " " +
         std::to_string(style.height) + "\">\n";
  out += "  <line class=\"axis\" x1=\"" + std::to_string(axis_x) + "\" y1=\"" +
         std::to_string(row_y(0)) + "\" x2=\"" + std::to_string(axis_x) + "\" y2=\"" +
         std::to_string(row_y(rows)) + "\" stroke=\"black\" stroke-width=\"3\"/>\n";
  for (int i = 0; i < g.p; ++i) {
    for (int j = 0; j < g.n; ++j) {
      const int s = g.index(i, j);
      const std::string& dash = style.dashes[static_cast<std::size_t>(i) % style.dashes.size()];
      out += "  <path class=\"strand\" data-orbit=\"" + std::to_string(i) +
             "\" data-strand=\"" + std::to_string(j) + "\" d=\"" + d[static_cast<std::size_t>(s)] +
             "\" fill=\"none\" stroke=\"" +
             detail::kStrandPalette[static_cast<std::size_t>(j) % detail::kStrandPalette.size()] +
             "\" stroke-width=\"2\"";
      if (!dash.empty()) out += " stroke-dasharray=\"" + dash + "\"";
      out += "/>\n";
    }
  }
  out += marks;
  out += "</svg>\n";
  return out;
}

}  // namespace orbit_braid
