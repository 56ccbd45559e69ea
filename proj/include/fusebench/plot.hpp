#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace fusebench {

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

/// Vertical bars with value labels, written as an RGB PNG.
void write_bar_plot(const std::filesystem::path& path, const std::string& title,
                    const std::vector<std::string>& labels, const std::vector<double>& values);

/// Polylines with markers, axis ticks and a legend, written as an RGB PNG.
void write_line_plot(const std::filesystem::path& path, const std::string& title, const std::string& x_label,
                     const std::string& y_label, const std::vector<PlotSeries>& series);

}  // namespace fusebench
