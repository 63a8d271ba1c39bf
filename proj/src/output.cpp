#include "jwalk/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "jwalk/errors.hpp"

namespace jwalk {
namespace {

std::string format_cell(const CsvCell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else {
          return v;
        }
      },
      cell);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string short_number(double v) {
  if (std::abs(v) < 1e-300) return "0";
  std::array<char, 32> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 4);
  return std::string(buf.data(), res.ptr);
}

struct Range {
  double lo;
  double hi;
};

Range padded(double lo, double hi) {
  if (hi > lo) return {lo, hi};
  const double pad = lo == 0.0 ? 0.5 : 0.05 * std::abs(lo);
  return {lo - pad, hi + pad};
}

// Roughly five "nice" ticks (1, 2, 5 times a power of ten) inside [lo, hi].
std::vector<double> nice_ticks(Range r) {
  const double span = r.hi - r.lo;
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (span / step <= 6.0) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(r.lo / step) * step; t <= r.hi + 1e-9 * step; t += step) {
    ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  }
  return ticks;
}

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string format_real(double x) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

void write_csv(const CsvTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) throw DomainError("write_csv: row width does not match header");
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << '\n';
  }
}

void write_csv(const CsvTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_csv(table, out);
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::string render_svg(const PlotSpec& plot) {
  bool any = false;
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const auto& s : plot.series) {
    if (s.x.size() != s.y.size()) throw DomainError("render_svg: series '" + s.label + "' has mismatched x/y");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      any = true;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (!any) throw DomainError("render_svg: nothing to plot");

  const Range xr = padded(xmin, xmax);
  const Range yr = padded(ymin, ymax);
  constexpr double left = 80, right = 20, top = 40, bottom = 60;
  constexpr double pw = kSvgWidth - left - right;
  constexpr double ph = kSvgHeight - top - bottom;
  auto sx = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto sy = [&](double y) { return top + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

  std::ostringstream o;
  o.precision(6);
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgWidth << "\" height=\"" << kSvgHeight
    << "\" viewBox=\"0 0 " << kSvgWidth << ' ' << kSvgHeight << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!plot.title.empty()) {
    o << "<text x=\"" << kSvgWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"16\">" << xml_escape(plot.title) << "</text>\n";
  }
  o << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
    << "<line x1=\"" << left << "\" y1=\"" << top + ph << "\" x2=\"" << left + pw << "\" y2=\"" << top + ph << "\"/>\n"
    << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + ph << "\"/>\n"
    << "</g>\n";

  o << "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (double t : nice_ticks(xr)) {
    const double x = sx(t);
    o << "<line x1=\"" << x << "\" y1=\"" << top + ph << "\" x2=\"" << x << "\" y2=\"" << top + ph + 5
      << "\" stroke=\"black\"/>"
      << "<text x=\"" << x << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">" << short_number(t)
      << "</text>\n";
  }
  for (double t : nice_ticks(yr)) {
    const double y = sy(t);
    o << "<line x1=\"" << left - 5 << "\" y1=\"" << y << "\" x2=\"" << left << "\" y2=\"" << y
      << "\" stroke=\"black\"/>"
      << "<text x=\"" << left - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">" << short_number(t)
      << "</text>\n";
  }
  o << "</g>\n";
  o << "<text x=\"" << left + pw / 2 << "\" y=\"" << kSvgHeight - 15
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << xml_escape(plot.x_label)
    << "</text>\n";
  o << "<text x=\"18\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
    << "font-size=\"13\" transform=\"rotate(-90 18 " << top + ph / 2 << ")\">" << xml_escape(plot.y_label)
    << "</text>\n";

  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const auto& s = plot.series[k];
    const char* color = kPalette[k % kPalette.size()];
    if (s.x.size() == 1) {
      o << "<circle cx=\"" << sx(s.x[0]) << "\" cy=\"" << sy(s.y[0]) << "\" r=\"4\" fill=\"" << color << "\"/>\n";
      continue;
    }
    if (s.x.empty()) continue;
    o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      o << sx(s.x[i]) << ',' << sy(s.y[i]) << ' ';
    }
    o << "\"/>\n";
  }

  if (plot.series.size() > 1) {
    o << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (std::size_t k = 0; k < plot.series.size(); ++k) {
      const double y = top + 12 + 16.0 * static_cast<double>(k);
      const double x = left + pw - 140;
      o << "<rect x=\"" << x << "\" y=\"" << y - 8 << "\" width=\"12\" height=\"3\" fill=\""
        << kPalette[k % kPalette.size()] << "\"/><text x=\"" << x + 18 << "\" y=\"" << y << "\">"
        << xml_escape(plot.series[k].label) << "</text>\n";
    }
    o << "</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

void render_svg(const PlotSpec& plot, std::ostream& out) { out << render_svg(plot); }

void render_svg(const PlotSpec& plot, const std::filesystem::path& path) {
  const std::string svg = render_svg(plot);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << svg;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace jwalk
