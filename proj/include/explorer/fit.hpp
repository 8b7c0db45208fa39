#ifndef EXPLORER_FIT_HPP_
#define EXPLORER_FIT_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "explorer/engine.hpp"

namespace explorer {

// Parameters the fitter may free. Weights are excluded: under the clamp they
// are degenerate with fear_initial.
enum class FitParam { FearInitial, FearDecay };

struct FitSpec {
  explicit FitSpec(SimConfig base_config) : base(std::move(base_config)) {}

  SimConfig base;
  std::vector<FitParam> free;              // non-empty, fixed optimization order
  std::vector<std::uint64_t> seeds;        // shared across every evaluation
  std::vector<double> grid_fear_initial;   // coarse grid, used when freed
  std::vector<double> grid_fear_decay;
  double refine_tol = 1e-3;
  int max_refine_iters = 40;
  ExecPolicy policy = ExecPolicy::Parallel;
};

struct FitPoint {
  double fear_initial = 0.0;
  double fear_decay = 0.0;
  double loss = 0.0;
};

struct FitResult {
  double fear_initial = 0.0;  // best assignment (free params optimized, fixed from base)
  double fear_decay = 0.0;
  double best_loss = 0.0;
  std::int64_t evaluations = 0;
  std::vector<FitPoint> trace;  // every evaluation, in evaluation order
};

// Mean squared error between two per-bin novel series, zero-padded to the
// longer length. Symmetric. Throws BothEmpty when both are empty.
double curve_loss(std::span<const double> simulated_mean, std::span<const double> target);

// Two-phase deterministic search: full coarse grid, then coordinate descent
// (fear_initial before fear_decay) with step halving, probes clamped to
// legal ranges. Ties break toward lower loss, then lower fear_initial, then
// lower fear_decay. Throws EmptyTarget and EmptyGrid.
FitResult fit_params(const FitSpec& spec, std::span<const double> target_novel);
FitResult fit_params(const FitSpec& spec, const ExplorationCurve& target);
FitResult fit_params(const FitSpec& spec, const MeanCurve& target);

// Evenly spaced grid over [lo, hi] used as the default coarse grid
// (step 0.05 over the legal range in the CLI).
std::vector<double> uniform_grid(double lo, double hi, double step);

}  // namespace explorer

#endif  // EXPLORER_FIT_HPP_
