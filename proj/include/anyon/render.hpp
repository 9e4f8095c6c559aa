// Copyright 2026 The anyonweave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "anyon/braid.hpp"

namespace anyon {

enum class RenderFormat { kText, kSvg };

inline RenderFormat parse_render_format(const std::string& s) {
  if (s == "text") return RenderFormat::kText;
  if (s == "svg") return RenderFormat::kSvg;
  throw UsageError("unsupported render format '" + s + "' (expected text or svg)");
}

namespace detail {

inline constexpr int kTextColumn = 5;

inline std::string charge_tag(Charge c) {
  std::string s = std::to_string(c.twice);
  while (s.size() < 3) s.insert(s.begin(), ' ');
  return s;
}

}  // namespace detail

/// Fixed-width art. Strand 1 is the bottom row, time runs left to right and
/// every letter takes five columns. The strand drawn unbroken through the
/// crossing is the one passing over: '/' when the lower strand does.
inline std::string render_text(const BraidWord& word) {
  const std::size_t n = word.strands();
  const std::size_t rows = n == 0 ? 0 : 2 * n - 1;
  std::vector<std::string> grid(rows);
  auto row_of = [&](std::size_t strand) { return 2 * (n - 1 - strand); };  // 0-based strand

  for (std::size_t r = 0; r < rows; ++r) grid[r] = (r % 2 == 0) ? "-" : " ";
  for (auto l : word.letters()) {
    const auto lo = static_cast<std::size_t>(l.index - 1);
    for (std::size_t s = 0; s < n; ++s) {
      auto& g = grid[row_of(s)];
      if (s == lo) g += "-/ \\-";
      else if (s == lo + 1) g += "-\\ /-";
      else g += std::string(detail::kTextColumn, '-');
    }
    for (std::size_t r = 1; r < rows; r += 2) {
      grid[r] += (r == row_of(lo) - 1) ? (l.sign > 0 ? "  /  " : "  \\  ") : "     ";
    }
  }
  const auto fin = word.final_objects();
  std::ostringstream os;
  for (std::size_t r = 0; r < rows; ++r) {
    if (r % 2 == 0) {
      const std::size_t s = n - 1 - r / 2;
      os << detail::charge_tag(word.context()[s]) << ' ' << grid[r] << "- " << fin[s].twice << '\n';
    } else {
      os << "    " << grid[r] << '\n';
    }
  }
  return os.str();
}

struct SvgStyle {
  int column = 24;   ///< horizontal pitch per letter
  int row = 28;      ///< vertical pitch per strand
  int margin = 16;
  double stroke = 3.0;
};

/// Standalone SVG. Each strand keeps the colour of the object it starts as;
/// under-strands are drawn first and the over-strand gets a white halo.
inline std::string render_svg(const BraidWord& word, const SvgStyle& st = {}) {
  static constexpr std::array<const char*, 10> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                                        "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
  const int n = static_cast<int>(word.strands());
  const int cols = static_cast<int>(word.size());
  const int width = 2 * st.margin + std::max(1, cols) * st.column;
  const int height = 2 * st.margin + std::max(0, n - 1) * st.row;
  auto y_of = [&](int pos) { return st.margin + (n - 1 - pos) * st.row; };  // 0-based position

  std::vector<int> owner(static_cast<std::size_t>(n));  // position -> starting strand
  for (int i = 0; i < n; ++i) owner[static_cast<std::size_t>(i)] = i;
  auto colour = [&](int strand) { return kPalette[static_cast<std::size_t>(strand) % kPalette.size()]; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<g fill=\"none\" stroke-width=\"" << st.stroke << "\" stroke-linecap=\"round\">\n";

  auto straight = [&](int x0, int pos) {
    os << "<path d=\"M" << x0 << ' ' << y_of(pos) << " H" << x0 + st.column << "\" stroke=\""
       << colour(owner[static_cast<std::size_t>(pos)]) << "\"/>\n";
  };
  auto strand = [&](int x0, int from, int to, const char* stroke, double w) {
    const int x1 = x0 + st.column, xm = x0 + st.column / 2;
    os << "<path d=\"M" << x0 << ' ' << y_of(from) << " C" << xm << ' ' << y_of(from) << ' ' << xm << ' '
       << y_of(to) << ' ' << x1 << ' ' << y_of(to) << "\" stroke=\"" << stroke << '"';
    if (w != st.stroke) os << " stroke-width=\"" << w << '"';
    os << "/>\n";
  };

  if (cols == 0) {
    for (int p = 0; p < n; ++p) straight(st.margin, p);
  }
  for (int c = 0; c < cols; ++c) {
    const auto l = word.letters()[static_cast<std::size_t>(c)];
    const int x0 = st.margin + c * st.column;
    const int lo = l.index - 1, hi = l.index;
    for (int p = 0; p < n; ++p)
      if (p != lo && p != hi) straight(x0, p);
    // Positive sign: the lower strand rises over the upper one.
    const int over_from = l.sign > 0 ? lo : hi, under_from = l.sign > 0 ? hi : lo;
    const int over_to = l.sign > 0 ? hi : lo, under_to = l.sign > 0 ? lo : hi;
    strand(x0, under_from, under_to, colour(owner[static_cast<std::size_t>(under_from)]), st.stroke);
    strand(x0, over_from, over_to, "white", 3 * st.stroke);
    strand(x0, over_from, over_to, colour(owner[static_cast<std::size_t>(over_from)]), st.stroke);
    std::swap(owner[static_cast<std::size_t>(lo)], owner[static_cast<std::size_t>(hi)]);
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

inline std::string render(const BraidWord& word, RenderFormat format) {
  return format == RenderFormat::kText ? render_text(word) : render_svg(word);
}

}  // namespace anyon
