#pragma once

// Minimal static SVG renderings: stem plot, heatmap, level diagram, line plot.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace finosc::svg {

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Frame {
  double width = 640, height = 400, margin = 50;
  double x0, x1, y0, y1;

  double px(double x) const { return margin + (x - x0) / (x1 - x0) * (width - 2 * margin); }
  double py(double y) const { return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin); }
};

inline void open(std::ostringstream& s, const Frame& f, const std::string& title) {
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width << "\" height=\"" << f.height
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << f.width / 2 << "\" y=\"20\" text-anchor=\"middle\">" << title << "</text>\n";
}

inline void axes(std::ostringstream& s, const Frame& f) {
  s << "<line x1=\"" << num(f.px(f.x0)) << "\" y1=\"" << num(f.py(f.y0)) << "\" x2=\"" << num(f.px(f.x1))
    << "\" y2=\"" << num(f.py(f.y0)) << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << num(f.px(f.x0)) << "\" y1=\"" << num(f.py(f.y0)) << "\" x2=\"" << num(f.px(f.x0))
    << "\" y2=\"" << num(f.py(f.y1)) << "\" stroke=\"black\"/>\n";
  s << "<text x=\"" << num(f.px(f.x0)) << "\" y=\"" << num(f.py(f.y0) + 15) << "\">" << num(f.x0) << "</text>\n";
  s << "<text x=\"" << num(f.px(f.x1)) << "\" y=\"" << num(f.py(f.y0) + 15)
    << "\" text-anchor=\"end\">" << num(f.x1) << "</text>\n";
  s << "<text x=\"" << num(f.margin - 5) << "\" y=\"" << num(f.py(f.y1)) << "\" text-anchor=\"end\">"
    << num(f.y1) << "</text>\n";
  s << "<text x=\"" << num(f.margin - 5) << "\" y=\"" << num(f.py(f.y0)) << "\" text-anchor=\"end\">"
    << num(f.y0) << "</text>\n";
}

inline std::pair<double, double> padded_range(const std::vector<double>& v, bool include_zero) {
  double lo = *std::min_element(v.begin(), v.end());
  double hi = *std::max_element(v.begin(), v.end());
  if (include_zero) {
    lo = std::min(lo, 0.0);
    hi = std::max(hi, 0.0);
  }
  if (hi - lo < 1e-300) hi = lo + 1.0;
  return {lo, hi};
}

}  // namespace detail

// Vertical stems from 0 to y[k] at x[k].
inline std::string stem_plot(const std::vector<double>& x, const std::vector<double>& y,
                             const std::string& title) {
  detail::Frame f;
  std::tie(f.x0, f.x1) = detail::padded_range(x, false);
  f.x0 -= 0.5;
  f.x1 += 0.5;
  std::tie(f.y0, f.y1) = detail::padded_range(y, true);
  std::ostringstream s;
  detail::open(s, f, title);
  detail::axes(s, f);
  for (std::size_t k = 0; k < x.size(); ++k) {
    s << "<line x1=\"" << detail::num(f.px(x[k])) << "\" y1=\"" << detail::num(f.py(0)) << "\" x2=\""
      << detail::num(f.px(x[k])) << "\" y2=\"" << detail::num(f.py(y[k])) << "\" stroke=\"steelblue\"/>\n";
    s << "<circle cx=\"" << detail::num(f.px(x[k])) << "\" cy=\"" << detail::num(f.py(y[k]))
      << "\" r=\"3\" fill=\"steelblue\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

// Row-major values[r][c]; r runs along x (position), c along y (momentum).
inline std::string heatmap(const std::vector<std::vector<double>>& values, int first_index,
                           const std::string& title) {
  const std::size_t d = values.size();
  double lo = 0.0, hi = 0.0;
  for (const auto& row : values) {
    for (double v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const double span = std::max(std::abs(lo), std::abs(hi));
  detail::Frame f;
  f.width = f.height = 520;
  f.x0 = first_index - 0.5;
  f.x1 = first_index + static_cast<double>(d) - 0.5;
  f.y0 = f.x0;
  f.y1 = f.x1;
  std::ostringstream s;
  detail::open(s, f, title);
  const double cell = (f.width - 2 * f.margin) / static_cast<double>(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const double t = span > 0 ? values[r][c] / span : 0.0;
      const int red = t > 0 ? 255 : static_cast<int>(255 * (1 + t));
      const int blue = t < 0 ? 255 : static_cast<int>(255 * (1 - t));
      const int green = static_cast<int>(255 * (1 - std::abs(t)));
      s << "<rect x=\"" << detail::num(f.margin + r * cell) << "\" y=\""
        << detail::num(f.height - f.margin - (c + 1) * cell) << "\" width=\"" << detail::num(cell)
        << "\" height=\"" << detail::num(cell) << "\" fill=\"rgb(" << red << "," << green << "," << blue
        << ")\"/>\n";
    }
  }
  detail::axes(s, f);
  s << "</svg>\n";
  return s.str();
}

// One horizontal bar per eigenvalue.
inline std::string level_diagram(const std::vector<double>& levels, const std::string& title) {
  detail::Frame f;
  f.width = 320;
  f.x0 = 0;
  f.x1 = 1;
  std::tie(f.y0, f.y1) = detail::padded_range(levels, true);
  std::ostringstream s;
  detail::open(s, f, title);
  detail::axes(s, f);
  for (double e : levels) {
    s << "<line x1=\"" << detail::num(f.px(0.2)) << "\" y1=\"" << detail::num(f.py(e)) << "\" x2=\""
      << detail::num(f.px(0.8)) << "\" y2=\"" << detail::num(f.py(e)) << "\" stroke=\"darkred\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

inline std::string line_plot(const std::vector<double>& x, const std::vector<double>& y,
                             const std::string& title) {
  detail::Frame f;
  std::tie(f.x0, f.x1) = detail::padded_range(x, false);
  std::tie(f.y0, f.y1) = detail::padded_range(y, true);
  std::ostringstream s;
  detail::open(s, f, title);
  detail::axes(s, f);
  s << "<polyline fill=\"none\" stroke=\"steelblue\" points=\"";
  for (std::size_t k = 0; k < x.size(); ++k) {
    s << detail::num(f.px(x[k])) << "," << detail::num(f.py(y[k])) << " ";
  }
  s << "\"/>\n</svg>\n";
  return s.str();
}

}  // namespace finosc::svg
