#include "explorer/engine.hpp"

#include <algorithm>
#include <string>

namespace explorer {

void validate_config(const SimConfig& config) {
  validate_params(config.agent);
  if (config.bin_width < 1) {
    throw Error(ErrorKind::ValidationError,
                "bin_width must be >= 1, got " + std::to_string(config.bin_width));
  }
  if (config.max_ticks < 0) {
    throw Error(ErrorKind::ValidationError,
                "max_ticks must be >= 0, got " + std::to_string(config.max_ticks));
  }
}

SimResult run_sim(const SimConfig& config) {
  validate_config(config);

  AgentState state = init_state(config.world, config.agent);
  RandomStream rng(config.seed);

  SimResult result;
  result.curve.bin_width = config.bin_width;

  bool completed = false;
  while (state.tick < config.max_ticks) {
    if (state.coverage_complete() && config.world.in_refuge(state.pos)) {
      completed = true;
      break;
    }
    const std::size_t bin = static_cast<std::size_t>(state.tick / config.bin_width);
    if (bin >= result.curve.novel.size()) {
      result.curve.novel.resize(bin + 1, 0);
      result.curve.crossings.resize(bin + 1, 0);
    }
    StepEvents events = step(state, config.world, config.agent, rng);
    if (events.novel_cell) ++result.curve.novel[bin];
    if (events.crossed_line) ++result.curve.crossings[bin];
  }
  if (!completed) {
    completed = state.coverage_complete() && config.world.in_refuge(state.pos);
  }

  result.completed = completed;
  result.ticks_used = state.tick;
  result.final_fear = state.fear;
  result.final_pos = state.pos;
  return result;
}

ReplicateSet run_replicates(const SimConfig& config, std::span<const std::uint64_t> seeds,
                            ExecPolicy policy) {
  if (seeds.empty()) {
    throw Error(ErrorKind::EmptySeeds, "run_replicates requires at least one seed");
  }
  validate_config(config);

  const int n = static_cast<int>(seeds.size());
  ReplicateSet set;
  set.runs.resize(seeds.size());

  if (policy == ExecPolicy::Parallel) {
    // Run lengths vary wildly with fear level; dynamic scheduling balances them.
    // Results land in seed order, so reduction below is order-deterministic.
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      SimConfig run_config = config;
      run_config.seed = seeds[i];
      set.runs[i] = run_sim(run_config);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      SimConfig run_config = config;
      run_config.seed = seeds[i];
      set.runs[i] = run_sim(run_config);
    }
  }

  std::size_t length = 0;
  for (const SimResult& run : set.runs) {
    length = std::max(length, run.curve.novel.size());
  }

  MeanCurve& mean = set.mean;
  mean.bin_width = config.bin_width;
  mean.replicates = n;
  mean.seeds.assign(seeds.begin(), seeds.end());
  mean.novel.assign(length, 0.0);
  mean.crossings.assign(length, 0.0);
  for (const SimResult& run : set.runs) {
    for (std::size_t b = 0; b < run.curve.novel.size(); ++b) {
      mean.novel[b] += static_cast<double>(run.curve.novel[b]);
      mean.crossings[b] += static_cast<double>(run.curve.crossings[b]);
    }
  }
  for (std::size_t b = 0; b < length; ++b) {
    mean.novel[b] /= static_cast<double>(n);
    mean.crossings[b] /= static_cast<double>(n);
  }
  return set;
}

const char* sweep_param_name(SweepParam param) {
  switch (param) {
    case SweepParam::FearInitial: return "fear_initial";
    case SweepParam::FearDecay: return "fear_decay";
    case SweepParam::WExplore: return "w_explore";
    case SweepParam::WFear: return "w_fear";
  }
  return "?";
}

SweepParam parse_sweep_param(const std::string& name) {
  if (name == "fear_initial") return SweepParam::FearInitial;
  if (name == "fear_decay") return SweepParam::FearDecay;
  if (name == "w_explore") return SweepParam::WExplore;
  if (name == "w_fear") return SweepParam::WFear;
  throw Error(ErrorKind::UnknownParam, "unknown parameter '" + name + "'");
}

void apply_param(AgentParams& params, SweepParam param, double value) {
  const bool unit_range = param == SweepParam::FearInitial || param == SweepParam::FearDecay;
  if (unit_range && !(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorKind::ValueOutOfRange,
                std::string(sweep_param_name(param)) + " = " + std::to_string(value) +
                    " outside [0, 1]");
  }
  if (!unit_range && !(value >= 0.0)) {
    throw Error(ErrorKind::ValueOutOfRange,
                std::string(sweep_param_name(param)) + " = " + std::to_string(value) +
                    " outside [0, inf)");
  }
  switch (param) {
    case SweepParam::FearInitial: params.fear_initial = value; break;
    case SweepParam::FearDecay: params.fear_decay = value; break;
    case SweepParam::WExplore: params.w_explore = value; break;
    case SweepParam::WFear: params.w_fear = value; break;
  }
}

SweepResult sweep(const SimConfig& base, SweepParam param, std::span<const double> values,
                  std::span<const std::uint64_t> seeds, ExecPolicy policy) {
  if (values.empty()) {
    throw Error(ErrorKind::EmptyValues, "sweep requires at least one parameter value");
  }
  if (seeds.empty()) {
    throw Error(ErrorKind::EmptySeeds, "sweep requires at least one seed");
  }

  SweepResult result;
  result.param = param;
  result.rows.reserve(values.size());
  for (double value : values) {
    SimConfig config = base;
    apply_param(config.agent, param, value);

    SweepRow row;
    row.value = value;
    row.mean = run_replicates(config, seeds, policy).mean;

    const std::span<const double> novel(row.mean.novel);
    row.auc_novel = auc(novel);
    if (row.auc_novel > 0.0) {
      row.peak_bin = static_cast<std::int64_t>(peak_bin(novel).first);
      row.t50 = static_cast<std::int64_t>(time_to_fraction(novel, 0.5));
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace explorer
