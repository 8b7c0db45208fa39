#include "explorer/curves.hpp"

#include <algorithm>
#include <string>

namespace explorer {

namespace {

template <typename T>
std::vector<double> to_doubles(std::span<const T> series) {
  return std::vector<double>(series.begin(), series.end());
}

template <typename T>
std::pair<std::size_t, T> peak_bin_impl(std::span<const T> series) {
  if (series.empty()) {
    throw Error(ErrorKind::EmptySeries, "peak_bin requires a non-empty series");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (series[i] > series[best]) best = i;
  }
  return {best, series[best]};
}

template <typename T, typename Sum>
std::size_t time_to_fraction_impl(std::span<const T> series, double q) {
  if (!(q > 0.0 && q <= 1.0)) {
    throw Error(ErrorKind::BadFraction,
                "fraction q = " + std::to_string(q) + " outside (0, 1]");
  }
  Sum total = 0;
  for (T v : series) total += v;
  if (!(total > 0)) {
    throw Error(ErrorKind::ZeroTotal, "time_to_fraction requires a positive total");
  }
  const double threshold = q * static_cast<double>(total);
  double cumulative = 0.0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    cumulative += static_cast<double>(series[i]);
    if (cumulative >= threshold) return i;
  }
  return series.size() - 1;  // unreachable for q <= 1; guards rounding
}

}  // namespace

void validate_curve(const ExplorationCurve& curve) {
  if (curve.bin_width < 1) {
    throw Error(ErrorKind::ValidationError,
                "bin_width must be >= 1, got " + std::to_string(curve.bin_width));
  }
  if (curve.novel.size() != curve.crossings.size()) {
    throw Error(ErrorKind::ValidationError,
                "novel and crossings series lengths differ: " +
                    std::to_string(curve.novel.size()) + " vs " +
                    std::to_string(curve.crossings.size()));
  }
  for (std::size_t i = 0; i < curve.novel.size(); ++i) {
    if (curve.novel[i] < 0 || curve.crossings[i] < 0 ||
        curve.novel[i] > curve.crossings[i] || curve.crossings[i] > curve.bin_width) {
      throw Error(ErrorKind::ValidationError,
                  "bin " + std::to_string(i) + " violates 0 <= novel <= crossings <= bin_width");
    }
  }
}

std::int64_t auc(std::span<const std::int64_t> series) {
  std::int64_t total = 0;
  for (auto v : series) total += v;
  return total;
}

double auc(std::span<const double> series) {
  double total = 0.0;
  for (auto v : series) total += v;
  return total;
}

std::pair<std::size_t, std::int64_t> peak_bin(std::span<const std::int64_t> series) {
  return peak_bin_impl(series);
}

std::pair<std::size_t, double> peak_bin(std::span<const double> series) {
  return peak_bin_impl(series);
}

std::size_t time_to_fraction(std::span<const std::int64_t> series, double q) {
  return time_to_fraction_impl<std::int64_t, std::int64_t>(series, q);
}

std::size_t time_to_fraction(std::span<const double> series, double q) {
  return time_to_fraction_impl<double, double>(series, q);
}

std::vector<double> smooth(std::span<const double> series, int window) {
  if (window < 1 || window % 2 == 0) {
    throw Error(ErrorKind::BadWindow,
                "window must be odd and >= 1, got " + std::to_string(window));
  }
  const int half = window / 2;
  const int n = static_cast<int>(series.size());
  std::vector<double> out(series.size(), 0.0);
  for (int i = 0; i < n; ++i) {
    const int lo = std::max(0, i - half);
    const int hi = std::min(n - 1, i + half);
    double sum = 0.0;
    for (int j = lo; j <= hi; ++j) sum += series[j];
    out[i] = sum / static_cast<double>(hi - lo + 1);
  }
  return out;
}

std::vector<double> smooth(std::span<const std::int64_t> series, int window) {
  std::vector<double> real = to_doubles(series);
  return smooth(std::span<const double>(real), window);
}

bool is_unimodal(std::span<const double> series, double epsilon) {
  const std::size_t n = series.size();
  if (n <= 1) return true;
  // Largest split with every step before it rising (within epsilon), and the
  // smallest split with every step after it falling. Unimodal iff they overlap.
  std::size_t rise_end = 0;
  while (rise_end + 1 < n && series[rise_end + 1] >= series[rise_end] - epsilon) {
    ++rise_end;
  }
  std::size_t fall_start = n - 1;
  while (fall_start > 0 && series[fall_start] <= series[fall_start - 1] + epsilon) {
    --fall_start;
  }
  return fall_start <= rise_end;
}

ShiftStats shift_stats(std::span<const double> a_novel, std::span<const double> b_novel) {
  const double total_a = auc(a_novel);
  const double total_b = auc(b_novel);
  if (!(total_a > 0.0) || !(total_b > 0.0)) {
    throw Error(ErrorKind::ZeroTotal, "shift_stats requires positive novel totals");
  }
  ShiftStats stats;
  stats.delta_t50 = static_cast<std::int64_t>(time_to_fraction(b_novel, 0.5)) -
                    static_cast<std::int64_t>(time_to_fraction(a_novel, 0.5));
  stats.delta_peak = static_cast<std::int64_t>(peak_bin(b_novel).first) -
                     static_cast<std::int64_t>(peak_bin(a_novel).first);
  stats.auc_ratio = total_b / total_a;
  return stats;
}

ShiftStats shift_stats(const ExplorationCurve& a, const ExplorationCurve& b) {
  if (a.bin_width != b.bin_width) {
    throw Error(ErrorKind::BinWidthMismatch,
                "bin widths differ: " + std::to_string(a.bin_width) + " vs " +
                    std::to_string(b.bin_width));
  }
  std::vector<double> an(a.novel.begin(), a.novel.end());
  std::vector<double> bn(b.novel.begin(), b.novel.end());
  return shift_stats(std::span<const double>(an), std::span<const double>(bn));
}

}  // namespace explorer
