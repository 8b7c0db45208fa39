// Benchmark of the replicate batch kernel: serial reference vs OpenMP path.
// Both must produce identical results; the speedup column is the payoff of
// the parallel path on multi-core hosts.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "explorer/engine.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::int64_t checksum(const explorer::ReplicateSet& set) {
  std::int64_t sum = 0;
  for (const explorer::SimResult& run : set.runs) {
    sum += run.ticks_used;
    for (auto v : run.curve.novel) sum += v;
    for (auto v : run.curve.crossings) sum += 3 * v;
  }
  return sum;
}

}  // namespace

int main(int argc, char** argv) {
  int replicates = 64;
  if (argc > 1) replicates = std::atoi(argv[1]);
  if (replicates < 1) replicates = 1;

#ifdef _OPENMP
  std::printf("openmp: yes, max threads %d\n", omp_get_max_threads());
#else
  std::printf("openmp: no (serial build)\n");
#endif
  std::printf("replicates per batch: %d\n\n", replicates);

  explorer::GridWorld world(20, 20, {0, 0, 4, 4}, {1, 1});
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(replicates));
  std::iota(seeds.begin(), seeds.end(), 1000);

  std::printf("%-14s %12s %12s %9s %s\n", "fear_initial", "serial[s]", "parallel[s]",
              "speedup", "identical");
  for (double fear : {0.2, 0.5, 0.9}) {
    explorer::SimConfig config{world, {}, 100, 200000, 42};
    config.agent.fear_initial = fear;

    auto t0 = Clock::now();
    explorer::ReplicateSet serial =
        explorer::run_replicates(config, seeds, explorer::ExecPolicy::Serial);
    const double serial_s = seconds_since(t0);

    t0 = Clock::now();
    explorer::ReplicateSet parallel =
        explorer::run_replicates(config, seeds, explorer::ExecPolicy::Parallel);
    const double parallel_s = seconds_since(t0);

    const bool same = checksum(serial) == checksum(parallel) &&
                      serial.mean.novel == parallel.mean.novel &&
                      serial.mean.crossings == parallel.mean.crossings;
    std::printf("%-14.2f %12.4f %12.4f %8.2fx %s\n", fear, serial_s, parallel_s,
                parallel_s > 0.0 ? serial_s / parallel_s : 0.0, same ? "yes" : "NO");
    if (!same) return 1;
  }
  return 0;
}
