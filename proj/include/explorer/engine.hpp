#ifndef EXPLORER_ENGINE_HPP_
#define EXPLORER_ENGINE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "explorer/agent.hpp"
#include "explorer/curves.hpp"
#include "explorer/grid_world.hpp"

namespace explorer {

struct SimConfig {
  GridWorld world;
  AgentParams agent;
  int bin_width = 100;
  std::int64_t max_ticks = 200000;
  std::uint64_t seed = 42;
};

// Throws ValidationError on bad bin_width/max_ticks and propagates agent
// validation. max_ticks = 0 is allowed at the engine level (no-op run).
void validate_config(const SimConfig& config);

struct SimResult {
  ExplorationCurve curve;
  bool completed = false;  // all arena cells visited and agent back in refuge
  std::int64_t ticks_used = 0;
  double final_fear = 0.0;
  Position final_pos;
};

// Replicate-averaged curves; shorter runs are zero-padded before averaging.
struct MeanCurve {
  int bin_width = 1;
  std::vector<double> novel;
  std::vector<double> crossings;
  int replicates = 0;
  std::vector<std::uint64_t> seeds;
};

struct ReplicateSet {
  MeanCurve mean;
  std::vector<SimResult> runs;  // ordered by input seed order
};

// Replicate batches run either on the OpenMP pool or on the calling thread.
// Both paths produce bit-identical results; Serial is the reference the
// tests and the benchmark compare against.
enum class ExecPolicy { Serial, Parallel };

// One simulation from tick 0 until completion or max_ticks. Per bin, counts
// novel-cell and crossing events; a partially filled final bin is kept.
SimResult run_sim(const SimConfig& config);

// One run per seed (overriding config.seed), reduced in input order.
ReplicateSet run_replicates(const SimConfig& config, std::span<const std::uint64_t> seeds,
                            ExecPolicy policy = ExecPolicy::Parallel);

enum class SweepParam { FearInitial, FearDecay, WExplore, WFear };

const char* sweep_param_name(SweepParam param);
// Throws UnknownParam for names outside the sweepable set.
SweepParam parse_sweep_param(const std::string& name);

struct SweepRow {
  double value = 0.0;
  MeanCurve mean;
  double auc_novel = 0.0;     // area under the mean novel curve
  std::int64_t peak_bin = -1; // earliest peak of the mean novel curve; -1 when flat zero
  std::int64_t t50 = -1;      // first bin reaching half the total; -1 when flat zero
};

struct SweepResult {
  SweepParam param = SweepParam::FearInitial;
  std::vector<SweepRow> rows;  // ordered by input value order
};

// One replicate set per value of the swept parameter.
// Throws EmptyValues, EmptySeeds, ValueOutOfRange.
SweepResult sweep(const SimConfig& base, SweepParam param, std::span<const double> values,
                  std::span<const std::uint64_t> seeds,
                  ExecPolicy policy = ExecPolicy::Parallel);

// Applies one sweepable parameter to an AgentParams, range-checked.
void apply_param(AgentParams& params, SweepParam param, double value);

}  // namespace explorer

#endif  // EXPLORER_ENGINE_HPP_
