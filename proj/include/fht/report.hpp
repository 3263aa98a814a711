#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fht/analysis.hpp"
#include "fht/errors.hpp"
#include "fht/image.hpp"
#include "fht/rational.hpp"

namespace fht {

/// Decimal rendering with 12 significant digits.
inline std::string format_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string format_decimal(const Rational& r) { return format_decimal(to_double(r)); }

inline void write_hough_csv(std::ostream& out, const HoughImage& hough) {
  out << "t,s,value\n";
  for (int t = 0; t < hough.width(); ++t) {
    for (int s = 0; s < hough.height(); ++s) out << t << ',' << s << ',' << hough(t, s) << '\n';
  }
}

inline void write_error_csv(std::ostream& out, const std::vector<ErrorReport>& reports) {
  out << "n,algo,lambda,max_error\n";
  for (const auto& r : reports) {
    out << r.width << ',' << r.algorithm << ',' << (r.lambda ? format_decimal(*r.lambda) : "") << ','
        << format_decimal(r.global_max) << '\n';
  }
}

inline void write_opcount_csv(std::ostream& out, const std::vector<ComplexityPoint>& points) {
  out << "n,lambda,sp_size,additions,normalized\n";
  for (const auto& p : points) {
    out << p.n << ',' << (p.lambda ? format_decimal(*p.lambda) : "") << ',' << p.sp_size << ',' << p.additions << ','
        << format_decimal(p.normalized) << '\n';
  }
}

inline void write_size_csv(std::ostream& out, const std::vector<SizePoint>& points) {
  out << "n,lambda,sp_size\n";
  for (const auto& p : points) out << p.n << ',' << format_decimal(p.lambda) << ',' << p.sp_size << '\n';
}

/// Header plus string cells; rows may be ragged only if the input is.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  }
};

inline CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  auto split = [](const std::string& l) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(l);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!l.empty() && l.back() == ',') cells.emplace_back();
    return cells;
  };
  while (std::getline(in, line)) {
    const std::size_t line_at = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line);
    if (table.header.empty()) {
      table.header = std::move(cells);
    } else {
      if (cells.size() != table.header.size()) throw ParseError("row has wrong number of cells", line_at);
      table.rows.push_back(std::move(cells));
    }
  }
  if (table.header.empty()) throw ParseError("empty CSV", 0);
  return table;
}

inline std::optional<double> parse_number(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  std::size_t used = 0;
  try {
    const double v = std::stod(cell, &used);
    if (used != cell.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// Standalone SVG line chart: one polyline per y column against column x.
///
/// Rows whose x or y cell is empty or non-numeric are skipped for that series.
/// Output depends only on the table, so re-plotting is byte-stable.
inline std::string render_svg_chart(const CsvTable& table, const std::string& x_name,
                                    const std::vector<std::string>& y_names, const std::string& title = "") {
  if (table.rows.empty()) throw ParseError("CSV has no data rows", 0);
  const auto xc = table.column(x_name);
  if (!xc) throw RangeError("missing column: " + x_name);
  if (y_names.empty()) throw RangeError("no y columns to plot");

  struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
  };
  std::vector<Series> series;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& name : y_names) {
    const auto yc = table.column(name);
    if (!yc) throw RangeError("missing column: " + name);
    Series s{name, {}};
    for (const auto& row : table.rows) {
      const auto x = parse_number(row[*xc]);
      const auto y = parse_number(row[*yc]);
      if (!x || !y) continue;
      s.points.emplace_back(*x, *y);
      xmin = std::min(xmin, *x);
      xmax = std::max(xmax, *x);
      ymin = std::min(ymin, *y);
      ymax = std::max(ymax, *y);
    }
    if (s.points.empty()) throw RangeError("column " + name + " has no numeric values");
    series.push_back(std::move(s));
  }
  if (xmax == xmin) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymax == ymin) {
    ymin -= 0.5;
    ymax += 0.5;
  }

  constexpr double kWidth = 720, kHeight = 440;
  constexpr double kLeft = 80, kRight = 160, kTop = 40, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  auto py = [&](double y) { return kTop + plot_h - (y - ymin) / (ymax - ymin) * plot_h; };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };
  auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
      }
    }
    return out;
  };
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                            "#9467bd", "#8c564b", "#e377c2", "#17becf"};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) {
    svg << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"16\">" << escape(title) << "</text>\n";
  }
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\"" << num(kLeft + plot_w)
      << "\" y2=\"" << num(kTop + plot_h) << "\"/>\n"
      << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft) << "\" y2=\""
      << num(kTop + plot_h) << "\"/>\n</g>\n";

  svg << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = xmin + (xmax - xmin) * i / kTicks;
    const double yv = ymin + (ymax - ymin) * i / kTicks;
    svg << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(kTop + plot_h + 18) << "\" text-anchor=\"middle\">"
        << format_decimal(std::round(xv * 1e4) / 1e4) << "</text>\n";
    svg << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(py(yv) + 4) << "\" text-anchor=\"end\">"
        << format_decimal(std::round(yv * 1e4) / 1e4) << "</text>\n";
  }
  svg << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 16) << "\" text-anchor=\"middle\">"
      << escape(x_name) << "</text>\n</g>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % std::size(kColors)];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < series[i].points.size(); ++k) {
      if (k) svg << ' ';
      svg << num(px(series[i].points[k].first)) << ',' << num(py(series[i].points[k].second));
    }
    svg << "\"/>\n";
    const double ly = kTop + 14 + 18 * static_cast<double>(i);
    svg << "<text x=\"" << num(kLeft + plot_w + 12) << "\" y=\"" << num(ly)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">" << escape(series[i].name)
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace fht
