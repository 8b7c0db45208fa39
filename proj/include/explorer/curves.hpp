#ifndef EXPLORER_CURVES_HPP_
#define EXPLORER_CURVES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "explorer/error.hpp"

namespace explorer {

// Time-binned exploration record of a single run: per bin, how many novel
// arena cells were discovered and how many grid lines were crossed.
struct ExplorationCurve {
  int bin_width = 1;  // ticks per bin
  std::vector<std::int64_t> novel;
  std::vector<std::int64_t> crossings;
};

// Throws when the series lengths differ, an element is negative,
// novel[i] > crossings[i], or crossings[i] > bin_width.
void validate_curve(const ExplorationCurve& curve);

struct ShiftStats {
  std::int64_t delta_t50 = 0;   // bins, b relative to a
  std::int64_t delta_peak = 0;  // bins
  double auc_ratio = 1.0;       // auc(b) / auc(a)
};

// Area under the curve: plain sum (counts are discrete events, rectangle rule).
std::int64_t auc(std::span<const std::int64_t> series);
double auc(std::span<const double> series);

// Earliest index attaining the maximum. Throws EmptySeries.
std::pair<std::size_t, std::int64_t> peak_bin(std::span<const std::int64_t> series);
std::pair<std::size_t, double> peak_bin(std::span<const double> series);

// Smallest index whose cumulative sum reaches q * auc(series).
// Throws BadFraction for q outside (0, 1], ZeroTotal when auc == 0.
std::size_t time_to_fraction(std::span<const std::int64_t> series, double q);
std::size_t time_to_fraction(std::span<const double> series, double q);

// Centered moving average with truncated edges; window must be odd and >= 1.
std::vector<double> smooth(std::span<const double> series, int window);
std::vector<double> smooth(std::span<const std::int64_t> series, int window);

// True iff the series rises then falls, tolerating per-step wobble <= epsilon:
// some split p exists with next >= prev - epsilon before p and
// next <= prev + epsilon from p on.
bool is_unimodal(std::span<const double> series, double epsilon);

// Timing and mass comparison of two novel series with a common bin width:
// delta_t50 = t50(b) - t50(a), delta_peak = peak(b) - peak(a),
// auc_ratio = auc(b) / auc(a). Throws ZeroTotal when either total is zero.
ShiftStats shift_stats(std::span<const double> a_novel, std::span<const double> b_novel);
// Convenience overload; additionally throws BinWidthMismatch.
ShiftStats shift_stats(const ExplorationCurve& a, const ExplorationCurve& b);

}  // namespace explorer

#endif  // EXPLORER_CURVES_HPP_
