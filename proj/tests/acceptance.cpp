// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Default world throughout: 20x20 grid, 4x4 refuge at the origin, start
// (1,1), unit drive weights, bin width 100, stochastic mode unless stated.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "explorer/cli.hpp"
#include "explorer/config.hpp"
#include "explorer/csv.hpp"
#include "explorer/fit.hpp"

using namespace explorer;
namespace fs = std::filesystem;

#ifndef EXPLORER_TEST_DATA_DIR
#define EXPLORER_TEST_DATA_DIR "tests/data"
#endif

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

void run_criterion(int number, const std::string& name,
                   const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, detail] = body();
    report(number, name, ok, detail);
  } catch (const std::exception& e) {
    report(number, name, false, std::string("exception: ") + e.what());
  }
}

GridWorld default_world() { return GridWorld(20, 20, {0, 0, 4, 4}, {1, 1}); }

SimConfig default_config(double fear_initial, double fear_decay, PolicyMode mode) {
  SimConfig config{default_world(), {}, 100, 200000, 42};
  config.agent.fear_initial = fear_initial;
  config.agent.fear_decay = fear_decay;
  config.agent.mode = mode;
  return config;
}

std::vector<std::uint64_t> seed_range(std::uint64_t base, int count) {
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(count));
  std::iota(seeds.begin(), seeds.end(), base);
  return seeds;
}

std::string fmt(double value) {
  std::ostringstream s;
  s << value;
  return s.str();
}

// ---- criterion 1: hump shape ------------------------------------------------

std::pair<bool, std::string> hump_shape() {
  const auto seeds = seed_range(100, 32);
  for (double fear : {0.5, 0.9}) {
    SimConfig config = default_config(fear, 0.02, PolicyMode::Stochastic);
    MeanCurve mean = run_replicates(config, seeds).mean;

    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < mean.novel.size(); ++i) {
      if (mean.novel[i] > 0.0) last_nonzero = i;
    }
    std::vector<double> truncated(mean.novel.begin(),
                                  mean.novel.begin() + static_cast<long>(last_nonzero) + 1);
    std::vector<double> smoothed = smooth(std::span<const double>(truncated), 5);
    const double peak = peak_bin(std::span<const double>(smoothed)).second;
    if (!is_unimodal(smoothed, 0.05 * peak)) {
      return {false, "fear_initial " + fmt(fear) + " mean curve is not unimodal"};
    }
  }
  return {true, "fear 0.5 and 0.9 mean curves rise then fall (window 5, eps 5% of peak)"};
}

// ---- criteria 2 and 3 share the fear ladder runs ----------------------------

struct LadderPoint {
  double fear;
  std::vector<SimResult> runs;
  MeanCurve mean;
};

std::vector<LadderPoint> fear_ladder() {
  const auto seeds = seed_range(100, 32);
  std::vector<LadderPoint> ladder;
  for (double fear : {0.2, 0.5, 0.8, 0.95}) {
    SimConfig config = default_config(fear, 0.02, PolicyMode::Stochastic);
    ReplicateSet set = run_replicates(config, seeds);
    ladder.push_back({fear, std::move(set.runs), std::move(set.mean)});
  }
  return ladder;
}

std::pair<bool, std::string> equal_area(const std::vector<LadderPoint>& ladder) {
  const std::int64_t arena = 384;
  for (const LadderPoint& point : ladder) {
    for (std::size_t i = 0; i < point.runs.size(); ++i) {
      const SimResult& run = point.runs[i];
      if (!run.completed) {
        return {false, "fear_initial " + fmt(point.fear) + " seed index " +
                           std::to_string(i) + " did not complete"};
      }
      if (auc(std::span<const std::int64_t>(run.curve.novel)) != arena) {
        return {false, "fear_initial " + fmt(point.fear) + " seed index " +
                           std::to_string(i) + " auc != 384"};
      }
    }
  }
  // Mean curves inherit the exact total, so every pairwise auc ratio is 1.
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    ShiftStats stats = shift_stats(ladder[0].mean.novel, ladder[i].mean.novel);
    if (stats.auc_ratio != 1.0) {
      return {false, "auc ratio between fear levels is " + fmt(stats.auc_ratio)};
    }
  }
  return {true, "every run at fear 0.2/0.5/0.8/0.95 completes with auc(novel) = 384"};
}

std::pair<bool, std::string> rightward_shift(const std::vector<LadderPoint>& ladder) {
  std::vector<double> mean_t50, mean_peak;
  for (const LadderPoint& point : ladder) {
    double t50_sum = 0.0, peak_sum = 0.0;
    for (const SimResult& run : point.runs) {
      t50_sum += static_cast<double>(
          time_to_fraction(std::span<const std::int64_t>(run.curve.novel), 0.5));
      peak_sum += static_cast<double>(
          peak_bin(std::span<const std::int64_t>(run.curve.novel)).first);
    }
    mean_t50.push_back(t50_sum / static_cast<double>(point.runs.size()));
    mean_peak.push_back(peak_sum / static_cast<double>(point.runs.size()));
  }
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    if (!(mean_t50[i] > mean_t50[i - 1])) {
      return {false, "mean t50 not strictly increasing: " + fmt(mean_t50[i - 1]) +
                         " then " + fmt(mean_t50[i])};
    }
    if (mean_peak[i] < mean_peak[i - 1]) {
      return {false, "mean peak bin decreases: " + fmt(mean_peak[i - 1]) + " then " +
                         fmt(mean_peak[i])};
    }
  }
  // The replicate-mean curves themselves shift right across the whole ladder.
  ShiftStats ends = shift_stats(ladder.front().mean.novel, ladder.back().mean.novel);
  if (!(ends.delta_t50 > 0)) {
    return {false, "mean-curve delta_t50 between fear 0.2 and 0.95 is " +
                       std::to_string(ends.delta_t50)};
  }
  return {true,
          "mean t50 " + fmt(mean_t50[0]) + " < " + fmt(mean_t50[1]) + " < " +
              fmt(mean_t50[2]) + " < " + fmt(mean_t50[3]) + " bins; mean peak non-decreasing"};
}

// ---- criterion 4: maximum-fear freeze, completion elsewhere ------------------

std::pair<bool, std::string> max_fear_freeze() {
  for (std::uint64_t seed : seed_range(7000, 8)) {
    SimConfig config = default_config(1.0, 0.0, PolicyMode::Stochastic);
    config.max_ticks = 10000;
    config.seed = seed;
    SimResult result = run_sim(config);
    for (std::size_t i = 0; i < result.curve.novel.size(); ++i) {
      if (result.curve.novel[i] != 0 || result.curve.crossings[i] != 0) {
        return {false, "seed " + std::to_string(seed) + " produced events at max fear"};
      }
    }
    if (result.completed) {
      return {false, "max-fear run reported completion"};
    }
  }

  // Away from the frozen corner, deterministic coverage must finish. Fear can
  // stall against a fixed (zero-decay) fear level, so the completion claim is
  // tested where fear habituates (or never existed); see the stall regression
  // test in the unit suite for the zero-decay boundary.
  for (double fear : {0.0, 0.2, 0.5, 0.8, 0.95, 0.999}) {
    for (double decay : {0.001, 0.02, 0.1}) {
      SimConfig config = default_config(fear, decay, PolicyMode::Deterministic);
      SimResult result = run_sim(config);
      if (!result.completed) {
        return {false, "deterministic run (fear " + fmt(fear) + ", decay " + fmt(decay) +
                           ") incomplete after 200000 ticks"};
      }
    }
  }
  SimConfig fearless = default_config(0.0, 0.0, PolicyMode::Deterministic);
  if (!run_sim(fearless).completed) {
    return {false, "fearless zero-decay run incomplete"};
  }
  return {true, "8 max-fear seeds all-zero over 10^4 ticks; 19 decaying/fearless "
                "deterministic configs complete coverage"};
}

// ---- criterion 5: oracle trace ----------------------------------------------

std::pair<bool, std::string> oracle_trace() {
  const std::string path = std::string(EXPLORER_TEST_DATA_DIR) + "/oracle_trace_3x3.txt";
  std::ifstream in(path);
  if (!in) return {false, "cannot open fixture " + path};

  struct Row {
    int tick, x, y, moved, novel;
  };
  std::vector<Row> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    Row row{};
    if (std::sscanf(line.c_str(), "%d,%d,%d,%d,%d", &row.tick, &row.x, &row.y, &row.moved,
                    &row.novel) == 5) {
      rows.push_back(row);
    }
  }
  if (rows.size() != 25) {
    return {false, "fixture has " + std::to_string(rows.size()) + " rows, expected 25"};
  }

  GridWorld world(3, 3, {0, 0, 1, 1}, {0, 0});
  AgentParams params;
  params.fear_initial = 0.0;
  params.fear_decay = 0.0;
  params.mode = PolicyMode::Deterministic;
  AgentState state = init_state(world, params);
  RandomStream rng(0);

  for (const Row& row : rows) {
    StepEvents events = step(state, world, params, rng);
    if (state.pos.x != row.x || state.pos.y != row.y ||
        events.moved != (row.moved != 0) || events.novel_cell != (row.novel != 0)) {
      return {false, "divergence at tick " + std::to_string(row.tick) + ": got (" +
                         std::to_string(state.pos.x) + "," + std::to_string(state.pos.y) +
                         ") moved=" + std::to_string(events.moved) +
                         " novel=" + std::to_string(events.novel_cell)};
    }
  }
  if (!state.coverage_complete() || !world.in_refuge(state.pos)) {
    return {false, "agent not home with full coverage after the trace"};
  }

  // The engine-level run must agree with the same trace.
  SimConfig config{world, params, 1, 1000, 0};
  SimResult result = run_sim(config);
  if (!result.completed || result.ticks_used != 25 ||
      auc(std::span<const std::int64_t>(result.curve.novel)) != 8 ||
      auc(std::span<const std::int64_t>(result.curve.crossings)) != 12) {
    return {false, "engine summary differs from the hand trace"};
  }
  return {true, "25-tick position/event sequence matches the checked-in derivation"};
}

// ---- criterion 6: fit recovery ----------------------------------------------

std::pair<bool, std::string> fit_recovery() {
  const auto seeds = seed_range(2000, 64);
  SimConfig truth = default_config(0.7, 0.02, PolicyMode::Stochastic);
  MeanCurve target = run_replicates(truth, seeds).mean;

  FitSpec spec{default_config(0.5, 0.02, PolicyMode::Stochastic)};
  spec.free = {FitParam::FearInitial};
  spec.seeds = seeds;  // common random numbers with the target
  spec.grid_fear_initial = uniform_grid(0.0, 1.0, 0.05);
  spec.grid_fear_decay = uniform_grid(0.0, 1.0, 0.05);

  FitResult result = fit_params(spec, target);

  if (std::abs(result.fear_initial - 0.7) > 0.05) {
    return {false, "recovered fear_initial " + fmt(result.fear_initial) + " not within "
                       "0.05 of 0.7"};
  }
  double loss_at_05 = -1.0, loss_at_09 = -1.0;
  for (const FitPoint& point : result.trace) {
    if (std::abs(point.fear_initial - 0.5) < 1e-12) loss_at_05 = point.loss;
    if (std::abs(point.fear_initial - 0.9) < 1e-12) loss_at_09 = point.loss;
  }
  if (loss_at_05 < 0.0 || loss_at_09 < 0.0) {
    return {false, "coarse grid losses at 0.5 / 0.9 missing from the trace"};
  }
  if (!(2.0 * result.best_loss <= loss_at_05 && 2.0 * result.best_loss <= loss_at_09)) {
    return {false, "best loss " + fmt(result.best_loss) + " not 2x below " +
                       fmt(loss_at_05) + " and " + fmt(loss_at_09)};
  }
  return {true, "recovered fear_initial " + fmt(result.fear_initial) + ", best loss " +
                    fmt(result.best_loss) + " vs " + fmt(loss_at_05) + " at 0.5 and " +
                    fmt(loss_at_09) + " at 0.9 (" + std::to_string(result.evaluations) +
                    " evaluations)"};
}

// ---- criterion 7: serialization and CLI determinism ---------------------------

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("explorer_acceptance_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::pair<int, std::string> run_cli_capture(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str() + "\x1e" + err.str()};
}

std::pair<bool, std::string> serialization_and_determinism() {
  std::mt19937 gen(777);
  for (int trial = 0; trial < 1000; ++trial) {
    ExplorationCurve curve;
    curve.bin_width = 1 + static_cast<int>(gen() % 500);
    const std::size_t length = 1 + gen() % 60;
    for (std::size_t i = 0; i < length; ++i) {
      const std::int64_t crossings =
          static_cast<std::int64_t>(gen() % (static_cast<unsigned>(curve.bin_width) + 1));
      curve.crossings.push_back(crossings);
      curve.novel.push_back(crossings == 0
                                ? 0
                                : static_cast<std::int64_t>(gen() % (crossings + 1)));
    }
    ExplorationCurve back = read_csv(write_csv(curve));
    if (back.bin_width != curve.bin_width || back.novel != curve.novel ||
        back.crossings != curve.crossings) {
      return {false, "round-trip mismatch on randomized curve " + std::to_string(trial)};
    }
  }

  // Every subcommand, invoked twice: identical exit codes, streams and files.
  TempDir tmp;
  write_text(tmp.file("config.json"),
             R"({"width":8,"height":8,"refuge":{"x":0,"y":0,"w":2,"h":2},"start":[1,1],)"
             R"("fear_initial":0.5,"fear_decay":0.05,"bin_width":20,"max_ticks":100000,)"
             R"("seed":11})");

  struct Step {
    std::string name;
    std::vector<std::string> args;
    std::vector<std::string> outputs;  // files to compare between invocations
  };
  const std::string cfg = tmp.file("config.json");
  std::vector<Step> steps{
      {"run",
       {"run", "--config", cfg, "--out", tmp.file("run.csv")},
       {tmp.file("run.csv")}},
      {"sweep",
       {"sweep", "--config", cfg, "--param", "fear_initial", "--values", "0.2,0.8",
        "--replicates", "4", "--out", tmp.file("sweep")},
       {tmp.file("sweep") + "/fear_initial_0.2.csv",
        tmp.file("sweep") + "/fear_initial_0.8.csv", tmp.file("sweep") + "/summary.csv"}},
      {"fit",
       {"fit", "--config", cfg, "--target", tmp.file("run.csv"), "--free", "fear_initial",
        "--replicates", "4"},
       {}},
      {"compare",
       {"compare", "--a", tmp.file("run.csv"), "--b", tmp.file("run.csv")},
       {}},
      {"plot",
       {"plot", "--in", tmp.file("run.csv"), "--out", tmp.file("chart.svg")},
       {tmp.file("chart.svg")}},
  };

  for (const Step& step : steps) {
    auto first = run_cli_capture(step.args);
    std::vector<std::string> first_files;
    for (const std::string& f : step.outputs) first_files.push_back(read_text(f));

    auto second = run_cli_capture(step.args);
    if (first.first != 0 || second.first != 0) {
      return {false, step.name + " exited nonzero"};
    }
    if (first.second != second.second) {
      return {false, step.name + " streams differ between invocations"};
    }
    for (std::size_t i = 0; i < step.outputs.size(); ++i) {
      if (read_text(step.outputs[i]) != first_files[i]) {
        return {false, step.name + " file output differs between invocations"};
      }
    }
  }
  return {true, "1000 curves round-trip; run/sweep/fit/compare/plot byte-stable"};
}

}  // namespace

int main() {
  run_criterion(1, "hump-shaped mean exploration curves", hump_shape);

  std::vector<LadderPoint> ladder;
  try {
    ladder = fear_ladder();
  } catch (const std::exception& e) {
    report(2, "equal area under the novel-cell curve", false,
           std::string("exception: ") + e.what());
    report(3, "fear shifts exploration later", false, "ladder unavailable");
    ladder.clear();
  }
  if (!ladder.empty()) {
    run_criterion(2, "equal area under the novel-cell curve",
                  [&] { return equal_area(ladder); });
    run_criterion(3, "fear shifts exploration later", [&] { return rightward_shift(ladder); });
  }

  run_criterion(4, "maximum fear freezes, anything less completes", max_fear_freeze);
  run_criterion(5, "deterministic 3x3 trace matches the hand derivation", oracle_trace);
  run_criterion(6, "fear parameter recovery by curve matching", fit_recovery);
  run_criterion(7, "csv round-trip and byte-deterministic subcommands",
                serialization_and_determinism);

  if (failures != 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
