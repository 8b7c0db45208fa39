#ifndef EXPLORER_SVG_PLOT_HPP_
#define EXPLORER_SVG_PLOT_HPP_

#include <string>
#include <utility>
#include <vector>

#include "explorer/error.hpp"

namespace explorer {

using LabeledSeries = std::pair<std::string, std::vector<double>>;

// Self-contained SVG line chart: axes, one polyline per labeled series, a
// legend, linear scales spanning the data. Byte-stable for identical inputs.
// Throws NoData when no series or every series is empty.
std::string render_plot(const std::vector<LabeledSeries>& curves,
                        const std::string& x_label = "bin",
                        const std::string& y_label = "events per bin");

}  // namespace explorer

#endif  // EXPLORER_SVG_PLOT_HPP_
