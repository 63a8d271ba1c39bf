#pragma once

// CSV and SVG emission for the command-line tool.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace jwalk {

using CsvCell = std::variant<double, std::int64_t, std::string>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;
};

// Reals are written with 17 significant digits (%.17g style).
std::string format_real(double x);

// Header row then one record per line, LF terminators. Throws DomainError if a
// row's width differs from the header's.
void write_csv(const CsvTable& table, std::ostream& out);
// Throws IoError naming the path on failure.
void write_csv(const CsvTable& table, const std::filesystem::path& path);

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
};

inline constexpr int kSvgWidth = 800;
inline constexpr int kSvgHeight = 500;

// Standalone 800x500 SVG line chart: axes, tick labels, one polyline per
// series (a circle marker for single-point series). Throws DomainError when
// there is nothing to draw or a series has mismatched x/y lengths.
std::string render_svg(const PlotSpec& plot);
void render_svg(const PlotSpec& plot, std::ostream& out);
void render_svg(const PlotSpec& plot, const std::filesystem::path& path);

}  // namespace jwalk
