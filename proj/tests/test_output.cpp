#include <gtest/gtest.h>

#include <bit>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "jwalk/errors.hpp"
#include "jwalk/output.hpp"

namespace jwalk {
namespace {

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

std::string csv(const CsvTable& t) {
  std::ostringstream o;
  write_csv(t, o);
  return o.str();
}

TEST(Csv, HeaderOnly) {
  EXPECT_EQ(csv(CsvTable{{"time", "probability"}, {}}), "time,probability\n");
}

TEST(Csv, MixedCells) {
  CsvTable t{{"key", "value", "count"}, {{std::string("a"), 0.5, std::int64_t{-3}}}};
  EXPECT_EQ(csv(t), "key,value,count\na,0.5,-3\n");
}

TEST(Csv, LineCountAndTerminators) {
  CsvTable t{{"time", "probability"}, {}};
  for (int i = 0; i < 1000; ++i) t.rows.push_back({0.1 * i, 1.0 / (i + 1)});
  const std::string s = csv(t);
  EXPECT_EQ(count(s, "\n"), 1001u);
  EXPECT_EQ(s.find('\r'), std::string::npos);
}

TEST(Csv, RowWidthMismatch) {
  CsvTable t{{"a", "b"}, {{1.0}}};
  std::ostringstream o;
  EXPECT_THROW(write_csv(t, o), DomainError);
}

TEST(Csv, RoundTripIsBitExact) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  std::vector<double> values{0.0, -0.0, 1.0 / 3.0, 1e-300, 6.02214076e23, 0.003455, 2.0 / std::sqrt(161700.0)};
  for (int i = 0; i < 500; ++i) values.push_back(d(rng) * std::pow(10.0, static_cast<double>(i % 40) - 20));
  CsvTable t{{"x"}, {}};
  for (double v : values) t.rows.push_back({v});
  std::istringstream in(csv(t));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x");
  for (double v : values) {
    ASSERT_TRUE(std::getline(in, line));
    double parsed = 0.0;
    const auto res = std::from_chars(line.data(), line.data() + line.size(), parsed);
    ASSERT_EQ(res.ec, std::errc());
    ASSERT_EQ(res.ptr, line.data() + line.size());
    EXPECT_EQ(std::bit_cast<std::uint64_t>(parsed), std::bit_cast<std::uint64_t>(v)) << line;
  }
}

TEST(Csv, SeventeenSignificantDigits) {
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
  EXPECT_EQ(format_real(1.0), "1");
  EXPECT_EQ(format_real(1e-20), "9.9999999999999995e-21");
}

TEST(Csv, FileOutputAndErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "jwalk_output_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "t.csv";
  write_csv(CsvTable{{"a"}, {{std::int64_t{7}}}}, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), "a\n7\n");
  std::filesystem::remove_all(dir);

  const auto bad = dir / "missing" / "x.csv";
  try {
    write_csv(CsvTable{{"a"}, {}}, bad);
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find(bad.string()), std::string::npos);
  }
}

TEST(Svg, SingleCurve) {
  PlotSeries s{"p", {}, {}};
  for (int i = 0; i <= 100; ++i) {
    s.x.push_back(7.0 * i);
    s.y.push_back(std::pow(std::sin(i * 0.025), 2));
  }
  const std::string svg = render_svg(PlotSpec{"curve", "time", "probability", {s}});
  EXPECT_EQ(count(svg, "<polyline"), 1u);
  EXPECT_NE(svg.find("width=\"800\""), std::string::npos);
  EXPECT_NE(svg.find("height=\"500\""), std::string::npos);
  EXPECT_NE(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\""), std::string::npos);
  EXPECT_GE(count(svg, "<text"), 6u);
  EXPECT_EQ(svg.find("href"), std::string::npos);
}

TEST(Svg, SinglePointMarker) {
  const std::string svg = render_svg(PlotSpec{"", "x", "y", {{"pt", {1.0}, {2.0}}}});
  EXPECT_EQ(count(svg, "<polyline"), 0u);
  EXPECT_EQ(count(svg, "<circle"), 1u);
}

TEST(Svg, FourSeries) {
  PlotSpec plot{"sweep", "gamma", "overlap", {}};
  for (int k = 0; k < 4; ++k) {
    PlotSeries s{"psi_" + std::to_string(k), {}, {}};
    for (int i = 0; i < 20; ++i) {
      s.x.push_back(i * 0.001);
      s.y.push_back((k + i) % 5 * 0.2);
    }
    plot.series.push_back(s);
  }
  const std::string svg = render_svg(plot);
  EXPECT_EQ(count(svg, "<polyline"), 4u);
  EXPECT_NE(svg.find("psi_3"), std::string::npos);
}

TEST(Svg, EscapesText) {
  const std::string svg = render_svg(PlotSpec{"a<b & c", "x", "y", {{"s", {0.0, 1.0}, {0.0, 1.0}}}});
  EXPECT_NE(svg.find("a&lt;b &amp; c"), std::string::npos);
}

TEST(Svg, EmptyInput) {
  EXPECT_THROW(render_svg(PlotSpec{}), DomainError);
  EXPECT_THROW(render_svg(PlotSpec{"", "", "", {{"s", {}, {}}}}), DomainError);
  EXPECT_THROW(render_svg(PlotSpec{"", "", "", {{"s", {1.0, 2.0}, {1.0}}}}), DomainError);
}

}  // namespace
}  // namespace jwalk
