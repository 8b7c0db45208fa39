#include "explorer/fit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace explorer {

namespace {

// Lexicographic (loss, fear_initial, fear_decay): the fit's tie-break order.
bool better(const FitPoint& a, const FitPoint& b) {
  if (a.loss != b.loss) return a.loss < b.loss;
  if (a.fear_initial != b.fear_initial) return a.fear_initial < b.fear_initial;
  return a.fear_decay < b.fear_decay;
}

double get_param(const FitPoint& p, FitParam which) {
  return which == FitParam::FearInitial ? p.fear_initial : p.fear_decay;
}

void set_param(FitPoint& p, FitParam which, double value) {
  if (which == FitParam::FearInitial) {
    p.fear_initial = value;
  } else {
    p.fear_decay = value;
  }
}

// Smallest positive gap of a sorted-or-not grid; 0.1 for singleton grids.
double grid_spacing(const std::vector<double>& grid) {
  std::vector<double> sorted(grid);
  std::sort(sorted.begin(), sorted.end());
  double spacing = 0.0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    double gap = sorted[i] - sorted[i - 1];
    if (gap > 0.0 && (spacing == 0.0 || gap < spacing)) spacing = gap;
  }
  return spacing > 0.0 ? spacing : 0.1;
}

class Objective {
 public:
  Objective(const FitSpec& spec, std::span<const double> target)
      : spec_(spec), target_(target) {}

  double evaluate(FitPoint& point) {
    SimConfig config = spec_.base;
    config.agent.fear_initial = point.fear_initial;
    config.agent.fear_decay = point.fear_decay;
    ReplicateSet reps = run_replicates(config, spec_.seeds, spec_.policy);
    point.loss = curve_loss(reps.mean.novel, target_);
    ++evaluations_;
    trace_.push_back(point);
    return point.loss;
  }

  std::int64_t evaluations() const { return evaluations_; }
  std::vector<FitPoint>&& take_trace() { return std::move(trace_); }

 private:
  const FitSpec& spec_;
  std::span<const double> target_;
  std::int64_t evaluations_ = 0;
  std::vector<FitPoint> trace_;
};

}  // namespace

double curve_loss(std::span<const double> simulated_mean, std::span<const double> target) {
  const std::size_t length = std::max(simulated_mean.size(), target.size());
  if (length == 0) {
    throw Error(ErrorKind::BothEmpty, "curve_loss requires at least one non-empty series");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < length; ++i) {
    const double a = i < simulated_mean.size() ? simulated_mean[i] : 0.0;
    const double b = i < target.size() ? target[i] : 0.0;
    const double diff = a - b;
    sum += diff * diff;
  }
  return sum / static_cast<double>(length);
}

FitResult fit_params(const FitSpec& spec, std::span<const double> target_novel) {
  if (target_novel.empty()) {
    throw Error(ErrorKind::EmptyTarget, "fit target novel series is empty");
  }
  if (spec.free.empty()) {
    throw Error(ErrorKind::EmptyGrid, "no free parameter to fit");
  }
  if (spec.seeds.empty()) {
    throw Error(ErrorKind::EmptySeeds, "fit requires at least one replicate seed");
  }
  validate_config(spec.base);

  const bool free_initial =
      std::find(spec.free.begin(), spec.free.end(), FitParam::FearInitial) != spec.free.end();
  const bool free_decay =
      std::find(spec.free.begin(), spec.free.end(), FitParam::FearDecay) != spec.free.end();
  // Fixed parameters contribute a single-point axis at their base value.
  std::vector<double> axis_initial =
      free_initial ? spec.grid_fear_initial
                   : std::vector<double>{spec.base.agent.fear_initial};
  std::vector<double> axis_decay =
      free_decay ? spec.grid_fear_decay : std::vector<double>{spec.base.agent.fear_decay};
  if (axis_initial.empty() || axis_decay.empty()) {
    throw Error(ErrorKind::EmptyGrid, "coarse grid for a free parameter is empty");
  }
  for (double v : axis_initial) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorKind::ValueOutOfRange,
                  "fear_initial grid value " + std::to_string(v) + " outside [0, 1]");
    }
  }
  for (double v : axis_decay) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorKind::ValueOutOfRange,
                  "fear_decay grid value " + std::to_string(v) + " outside [0, 1]");
    }
  }

  Objective objective(spec, target_novel);

  // `search` is the coordinate-descent center (moves only on strictly lower
  // loss); `overall` is the reported argmin over every evaluation under the
  // tie-break order.
  FitPoint search;
  FitPoint overall;
  bool have_any = false;
  auto record = [&](const FitPoint& point) {
    if (!have_any || better(point, overall)) {
      overall = point;
      have_any = true;
    }
  };

  // Phase 1: full coarse grid, fear_initial as the outer axis.
  for (double vi : axis_initial) {
    for (double vd : axis_decay) {
      FitPoint point{vi, vd, 0.0};
      objective.evaluate(point);
      record(point);
    }
  }
  search = overall;

  // Phase 2: coordinate descent from the coarse argmin. Steps start at half
  // the coarse spacing and halve whenever neither probe of a parameter
  // improves.
  double step_initial = grid_spacing(axis_initial) / 2.0;
  double step_decay = grid_spacing(axis_decay) / 2.0;

  for (int iter = 0; iter < spec.max_refine_iters; ++iter) {
    bool all_steps_small = true;
    for (FitParam which : {FitParam::FearInitial, FitParam::FearDecay}) {
      const bool is_free = which == FitParam::FearInitial ? free_initial : free_decay;
      if (!is_free) continue;
      double& step = which == FitParam::FearInitial ? step_initial : step_decay;
      if (step < spec.refine_tol) continue;
      all_steps_small = false;

      const double center = get_param(search, which);
      FitPoint improved = search;
      bool found = false;
      for (double delta : {-step, step}) {
        const double value = std::clamp(center + delta, 0.0, 1.0);
        if (value == center) continue;  // probe clamped onto the center
        FitPoint probe = search;
        set_param(probe, which, value);
        objective.evaluate(probe);
        record(probe);
        if (probe.loss < search.loss && (!found || better(probe, improved))) {
          improved = probe;
          found = true;
        }
      }
      if (found) {
        search = improved;
      } else {
        step /= 2.0;
      }
    }
    if (all_steps_small) break;
  }

  FitResult result;
  result.fear_initial = overall.fear_initial;
  result.fear_decay = overall.fear_decay;
  result.best_loss = overall.loss;
  result.evaluations = objective.evaluations();
  result.trace = objective.take_trace();
  return result;
}

FitResult fit_params(const FitSpec& spec, const ExplorationCurve& target) {
  std::vector<double> novel(target.novel.begin(), target.novel.end());
  return fit_params(spec, std::span<const double>(novel));
}

FitResult fit_params(const FitSpec& spec, const MeanCurve& target) {
  return fit_params(spec, std::span<const double>(target.novel));
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
  std::vector<double> grid;
  const int count = static_cast<int>(std::floor((hi - lo) / step + 0.5)) + 1;
  for (int i = 0; i < count; ++i) {
    grid.push_back(std::min(lo + i * step, hi));
  }
  return grid;
}

}  // namespace explorer
