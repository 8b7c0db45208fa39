#include "explorer/svg_plot.hpp"

#include <algorithm>
#include <cstddef>

#include "explorer/num_format.hpp"

namespace explorer {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kMarginLeft = 60.0;
constexpr double kMarginRight = 150.0;  // legend column
constexpr double kMarginTop = 20.0;
constexpr double kMarginBottom = 45.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string render_plot(const std::vector<LabeledSeries>& curves,
                        const std::string& x_label, const std::string& y_label) {
  std::size_t max_len = 0;
  double max_value = 0.0;
  for (const auto& [label, series] : curves) {
    max_len = std::max(max_len, series.size());
    for (double v : series) max_value = std::max(max_value, v);
  }
  if (curves.empty() || max_len == 0) {
    throw Error(ErrorKind::NoData, "plot requires at least one non-empty series");
  }
  if (max_value <= 0.0) max_value = 1.0;  // all-zero series still get a frame
  const double x_span = max_len > 1 ? static_cast<double>(max_len - 1) : 1.0;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto sx = [&](double bin) { return kMarginLeft + bin / x_span * plot_w; };
  auto sy = [&](double value) {
    return kMarginTop + (1.0 - value / max_value) * plot_h;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_double(kWidth) +
         "\" height=\"" + format_double(kHeight) + "\" viewBox=\"0 0 " +
         format_double(kWidth) + " " + format_double(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes
  const double x0 = kMarginLeft, y0 = kMarginTop + plot_h;
  svg += "<line x1=\"" + format_double(x0) + "\" y1=\"" + format_double(y0) + "\" x2=\"" +
         format_double(x0 + plot_w) + "\" y2=\"" + format_double(y0) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + format_double(x0) + "\" y1=\"" + format_double(y0) + "\" x2=\"" +
         format_double(x0) + "\" y2=\"" + format_double(kMarginTop) +
         "\" stroke=\"black\"/>\n";

  // axis extent labels and titles
  svg += "<text x=\"" + format_double(x0) + "\" y=\"" + format_double(y0 + 18.0) +
         "\" font-size=\"12\" text-anchor=\"middle\">0</text>\n";
  svg += "<text x=\"" + format_double(x0 + plot_w) + "\" y=\"" + format_double(y0 + 18.0) +
         "\" font-size=\"12\" text-anchor=\"middle\">" +
         format_int(static_cast<std::int64_t>(max_len) - 1) + "</text>\n";
  svg += "<text x=\"" + format_double(x0 - 8.0) + "\" y=\"" + format_double(y0 + 4.0) +
         "\" font-size=\"12\" text-anchor=\"end\">0</text>\n";
  svg += "<text x=\"" + format_double(x0 - 8.0) + "\" y=\"" +
         format_double(kMarginTop + 4.0) + "\" font-size=\"12\" text-anchor=\"end\">" +
         format_double(max_value) + "</text>\n";
  svg += "<text x=\"" + format_double(x0 + plot_w / 2.0) + "\" y=\"" +
         format_double(kHeight - 8.0) + "\" font-size=\"13\" text-anchor=\"middle\">" +
         escape_xml(x_label) + "</text>\n";
  svg += "<text x=\"16\" y=\"" + format_double(kMarginTop + plot_h / 2.0) +
         "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         format_double(kMarginTop + plot_h / 2.0) + ")\">" + escape_xml(y_label) +
         "</text>\n";

  // series
  for (std::size_t s = 0; s < curves.size(); ++s) {
    const auto& [label, series] = curves[s];
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::string points;
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (i) points.push_back(' ');
      points += format_double(sx(static_cast<double>(i)));
      points.push_back(',');
      points += format_double(sy(series[i]));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
  }

  // legend
  for (std::size_t s = 0; s < curves.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    const double ly = kMarginTop + 14.0 + 18.0 * static_cast<double>(s);
    const double lx = kWidth - kMarginRight + 12.0;
    svg += "<line x1=\"" + format_double(lx) + "\" y1=\"" + format_double(ly - 4.0) +
           "\" x2=\"" + format_double(lx + 20.0) + "\" y2=\"" + format_double(ly - 4.0) +
           "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"" + format_double(lx + 26.0) + "\" y=\"" + format_double(ly) +
           "\" font-size=\"12\">" + escape_xml(curves[s].first) + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace explorer
