#include "pipm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "pipm/errors.hpp"

namespace pipm {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

namespace {

constexpr int kWidth = 760;
constexpr int kHeight = 480;
constexpr int kLeft = 70;
constexpr int kRight = 170;  // legend gutter
constexpr int kTop = 46;
constexpr int kBottom = 56;

const char* kColors[] = {"#c0392b", "#2c3e50", "#27ae60", "#2980b9", "#8e44ad", "#a0522d"};
const char* kDashes[] = {"", "", "6,4", "6,4", "2,3", "2,3"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool ok() const { return lo <= hi; }
  void pad() {
    if (hi == lo) {
      hi += 1.0;
      lo -= 1.0;
    } else {
      const double p = 0.05 * (hi - lo);
      lo -= p;
      hi += p;
    }
  }
  double map(double v, double a, double b) const { return a + (v - lo) / (hi - lo) * (b - a); }
};

void axes(std::ostringstream& svg, const Range& xr, const Range& yr, const std::string& title,
          const std::string& x_label, const std::string& y_label, int plot_right) {
  svg << "<rect x='" << kLeft << "' y='" << kTop << "' width='" << plot_right - kLeft
      << "' height='" << kHeight - kTop - kBottom
      << "' fill='none' stroke='#888' stroke-width='1'/>\n";
  svg << "<text x='" << (kLeft + plot_right) / 2 << "' y='24' text-anchor='middle' "
      << "font-family='sans-serif' font-size='15'>" << title << "</text>\n";
  svg << "<text x='" << (kLeft + plot_right) / 2 << "' y='" << kHeight - 14
      << "' text-anchor='middle' font-family='sans-serif' font-size='12'>" << x_label
      << "</text>\n";
  svg << "<text x='18' y='" << (kTop + kHeight - kBottom) / 2
      << "' text-anchor='middle' font-family='sans-serif' font-size='12' "
      << "transform='rotate(-90 18 " << (kTop + kHeight - kBottom) / 2 << ")'>" << y_label
      << "</text>\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = xr.lo + (xr.hi - xr.lo) * t / 4.0;
    const double px = xr.map(fx, kLeft, plot_right);
    svg << "<line x1='" << num(px) << "' y1='" << kHeight - kBottom << "' x2='" << num(px)
        << "' y2='" << kHeight - kBottom + 5 << "' stroke='#888'/>\n";
    svg << "<text x='" << num(px) << "' y='" << kHeight - kBottom + 18
        << "' text-anchor='middle' font-family='sans-serif' font-size='11'>" << tick_label(fx)
        << "</text>\n";
    const double fy = yr.lo + (yr.hi - yr.lo) * t / 4.0;
    const double py = yr.map(fy, kHeight - kBottom, kTop);
    svg << "<line x1='" << kLeft - 5 << "' y1='" << num(py) << "' x2='" << kLeft << "' y2='"
        << num(py) << "' stroke='#888'/>\n";
    svg << "<text x='" << kLeft - 8 << "' y='" << num(py + 4)
        << "' text-anchor='end' font-family='sans-serif' font-size='11'>" << tick_label(fy)
        << "</text>\n";
  }
}

}  // namespace

std::string line_chart_svg(const std::vector<Series>& series, const std::string& title,
                           const std::string& x_label, const std::string& y_label) {
  Range xr, yr;
  for (const Series& s : series) {
    for (size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (std::isfinite(s.y[i])) {
        xr.add(s.x[i]);
        yr.add(s.y[i]);
      }
    }
  }
  if (!xr.ok() || !yr.ok()) return "";
  xr.pad();
  yr.pad();
  const int plot_right = kWidth - kRight;

  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' version='1.1' width='" << kWidth
      << "' height='" << kHeight << "'>\n";
  svg << "<rect width='100%' height='100%' fill='white'/>\n";
  axes(svg, xr, yr, title, x_label, y_label, plot_right);

  for (size_t si = 0; si < series.size(); ++si) {
    const Series& s = series[si];
    const char* color = kColors[si % 6];
    const char* dash = kDashes[si % 6];
    std::ostringstream pts;
    for (size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      pts << num(xr.map(s.x[i], kLeft, plot_right)) << ","
          << num(yr.map(s.y[i], kHeight - kBottom, kTop)) << " ";
    }
    svg << "<polyline fill='none' stroke='" << color << "' stroke-width='1.6'";
    if (dash[0] != '\0') svg << " stroke-dasharray='" << dash << "'";
    svg << " points='" << pts.str() << "'/>\n";
    const int ly = kTop + 18 + static_cast<int>(si) * 20;
    svg << "<line x1='" << plot_right + 10 << "' y1='" << ly << "' x2='" << plot_right + 34
        << "' y2='" << ly << "' stroke='" << color << "' stroke-width='2'";
    if (dash[0] != '\0') svg << " stroke-dasharray='" << dash << "'";
    svg << "/>\n";
    svg << "<text x='" << plot_right + 40 << "' y='" << ly + 4
        << "' font-family='sans-serif' font-size='11'>" << s.label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string signed_bar_chart_svg(std::vector<double> heights, const std::string& title,
                                 const std::string& y_label) {
  if (heights.empty()) return "";
  std::sort(heights.begin(), heights.end(), std::greater<double>());
  double peak = 0.0;
  for (const double h : heights) {
    if (std::isfinite(h)) peak = std::max(peak, std::abs(h));
  }
  if (peak == 0.0) peak = 1.0;

  Range yr;
  yr.add(-peak);
  yr.add(peak);
  yr.pad();
  const int plot_right = kWidth - 40;
  const double zero_y = yr.map(0.0, kHeight - kBottom, kTop);
  const double bar_w =
      static_cast<double>(plot_right - kLeft) / static_cast<double>(heights.size());

  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' version='1.1' width='" << kWidth
      << "' height='" << kHeight << "'>\n";
  svg << "<rect width='100%' height='100%' fill='white'/>\n";
  Range xr;
  xr.add(1.0);
  xr.add(static_cast<double>(heights.size()));
  if (heights.size() == 1) xr.add(2.0);
  axes(svg, xr, yr, title, "problem (sorted by height)", y_label, plot_right);
  svg << "<line x1='" << kLeft << "' y1='" << num(zero_y) << "' x2='" << plot_right << "' y2='"
      << num(zero_y) << "' stroke='#444' stroke-width='1'/>\n";

  for (size_t i = 0; i < heights.size(); ++i) {
    double h = heights[i];
    if (!std::isfinite(h)) h = h > 0 ? peak : -peak;
    const double x = kLeft + static_cast<double>(i) * bar_w + 1.0;
    const double y_top = yr.map(std::max(h, 0.0), kHeight - kBottom, kTop);
    const double y_bot = yr.map(std::min(h, 0.0), kHeight - kBottom, kTop);
    svg << "<rect x='" << num(x) << "' y='" << num(y_top) << "' width='"
        << num(std::max(bar_w - 2.0, 0.5)) << "' height='" << num(std::max(y_bot - y_top, 0.5))
        << "' fill='" << (h >= 0.0 ? "#27ae60" : "#c0392b") << "'/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace pipm
