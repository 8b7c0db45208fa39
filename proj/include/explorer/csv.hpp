#ifndef EXPLORER_CSV_HPP_
#define EXPLORER_CSV_HPP_

#include <string>
#include <vector>

#include "explorer/curves.hpp"
#include "explorer/engine.hpp"

namespace explorer {

// Curve CSV schema: header `bin,t_start,t_end,novel_cells,crossings`, one row
// per bin, t_start = bin * bin_width, LF line endings, UTF-8, no trailing
// delimiter. Single-run curves carry integer counts; replicate means carry
// real values in the same two columns.

std::string write_csv(const ExplorationCurve& curve);
std::string write_csv(const MeanCurve& curve);

// Strict inverse of write_csv(ExplorationCurve): integer counts only.
// Throws BadHeader, BadRow (non-integer, negative, novel > crossings, bin
// gap or reorder), InconsistentBinWidth.
ExplorationCurve read_csv(const std::string& text);

// Real-valued series with curve structure; what the CLI reads, so replicate
// means round-trip through files as well as single runs.
struct RealCurve {
  int bin_width = 1;
  std::vector<double> novel;
  std::vector<double> crossings;
};

// Same structural checks as read_csv but accepts fractional values.
RealCurve read_csv_real(const std::string& text);

}  // namespace explorer

#endif  // EXPLORER_CSV_HPP_
