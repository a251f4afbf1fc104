#pragma once

#include <string>
#include <vector>

namespace pipm {

// %.17g — exact round-trip, byte-stable across runs.
std::string format_value(double v);

void write_text_file(const std::string& path, const std::string& content);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;  // NaN entries are skipped
};

// Fixed-layout SVG 1.1 line chart; returns "" when there is nothing to plot.
std::string line_chart_svg(const std::vector<Series>& series, const std::string& title,
                           const std::string& x_label, const std::string& y_label);

// Signed bars sorted from largest to smallest height; "" when empty.
std::string signed_bar_chart_svg(std::vector<double> heights, const std::string& title,
                                 const std::string& y_label);

}  // namespace pipm
